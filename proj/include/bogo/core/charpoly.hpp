#pragma once

#include <vector>

#include "bogo/core/modp.hpp"
#include "bogo/core/polynomial.hpp"

namespace bogo {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// det(x I - M) for a square rational matrix, by Hessenberg reduction modulo
/// word-size primes and Chinese remaindering against a Hadamard-type bound.
Polynomial charpoly(const RationalMatrix& m);

/// det(x I - M) over F_p; M entries already reduced.
modp::PolyP charpoly_mod(std::vector<std::vector<modp::u64>> m, modp::u64 p);

}  // namespace bogo
