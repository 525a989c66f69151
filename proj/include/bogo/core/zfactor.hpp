#pragma once

#include <vector>

#include "bogo/core/polynomial.hpp"

namespace bogo {

/// f = unit * prod factor_i^multiplicity_i with each factor a primitive
/// irreducible integer polynomial of positive leading coefficient.
struct Factorization {
  BigRational unit;
  std::vector<std::pair<Polynomial, int>> factors;
};

inline constexpr int kFactorDegreeCap = 64;

/// Zassenhaus factorization over Z (equivalently Q). Square-free parts of
/// degree above the cap are accepted only when an irreducibility certificate
/// (Eisenstein or mod-p degree patterns) settles them without recombination.
Factorization factor_over_z(const Polynomial& f, int degree_cap = kFactorDegreeCap);

bool is_irreducible_over_q(const Polynomial& f, int degree_cap = kFactorDegreeCap);

}  // namespace bogo
