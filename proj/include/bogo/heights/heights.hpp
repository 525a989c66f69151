#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bogo/core/complex_roots.hpp"
#include "bogo/core/polynomial.hpp"

namespace bogo {

/// An algebraic number: primitive irreducible integer polynomial with positive
/// leading coefficient, together with a distinguished certified root.
class AlgebraicNumber {
 public:
  /// Validates f (rational coefficients are scaled to a primitive integer
  /// polynomial; reducible input throws DomainError). The distinguished root is
  /// the conjugate nearest to `approx`.
  static AlgebraicNumber from_min_poly(const Polynomial& f, std::complex<double> approx = {0.0, 0.0});
  /// As from_min_poly, without the irreducibility test. For polynomials that
  /// are minimal by construction.
  static AlgebraicNumber trusted(const Polynomial& f, std::complex<double> approx = {0.0, 0.0});
  static AlgebraicNumber rational(const BigRational& q);

  const Polynomial& min_poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const ComplexBall& root() const { return roots_[index_]; }
  const std::vector<ComplexBall>& conjugates() const { return roots_; }
  std::size_t root_index() const { return index_; }
  /// The same minimal polynomial with another conjugate distinguished.
  AlgebraicNumber conjugate(std::size_t i) const;
  bool is_zero() const { return poly_.degree() == 1 && poly_.coeff(0) == 0; }

 private:
  AlgebraicNumber() = default;
  static AlgebraicNumber build(const Polynomial& f, std::complex<double> approx, bool check);

  Polynomial poly_;
  std::vector<ComplexBall> roots_;
  std::size_t index_ = 0;
};

struct HeightProfile {
  double total = 0.0;
  /// Certified bound on |total - h(alpha)|.
  double error_bound = 0.0;
  int degree = 1;
  /// log max(1, |alpha_i|) for every conjugate, in the order of conjugates().
  std::vector<double> archimedean;
  /// (log a_d) / d.
  double finite_aggregate = 0.0;
  /// Archimedean places of Q(alpha): real embeddings (d_v = 1) and complex pairs (d_v = 2).
  int real_places = 0;
  int complex_places = 0;
  /// For rational alpha only: (p, log max(1, |alpha|_p)) over primes with a nonzero term.
  std::vector<std::pair<BigInt, double>> finite_places;
};

/// h(alpha) = (1/d)(log a_d + sum_i log max(1, |alpha_i|)).
HeightProfile weil_height(const AlgebraicNumber& alpha);

/// n if the minimal polynomial is the n-th cyclotomic polynomial.
std::optional<int> is_root_of_unity(const AlgebraicNumber& alpha);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs for inequalities, |lhs - rhs| for equalities.
  double slack = 0.0;
};

/// Product alpha*beta, power alpha^k (k may be negative) and zeta*alpha, each
/// as an AlgebraicNumber with the matching distinguished root.
AlgebraicNumber algebraic_product(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber algebraic_power(const AlgebraicNumber& a, int k);
AlgebraicNumber algebraic_inverse(const AlgebraicNumber& a);
AlgebraicNumber root_of_unity(int order);

/// Submultiplicativity, |k|-homogeneity, inverse invariance, invariance under
/// multiplication by a root of unity of the given order, and conjugation
/// invariance. Equalities are tested at tolerance `tol`.
std::vector<IdentityCheck> height_identity_suite(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, int k,
                                                 int zeta_order = 3, double tol = 1e-9);

}  // namespace bogo
