#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bogo/core/fq.hpp"
#include "bogo/core/number_field.hpp"
#include "bogo/core/polynomial.hpp"
#include "bogo/core/rng.hpp"
#include "bogo/elliptic/group_law.hpp"

namespace bogo {

class BadReduction : public DomainError {
 public:
  explicit BadReduction(std::uint64_t p)
      : DomainError("bad reduction at p = " + std::to_string(p)), p_(p) {}
  std::uint64_t prime() const { return p_; }

 private:
  std::uint64_t p_;
};

class PrimeTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrimeTooLarge : public GuardViolation {
 public:
  using GuardViolation::GuardViolation;
};

using PointQ = Point<BigRational>;
using PointFq = Point<FqElement>;
using PointK = Point<NFElement>;

/// y^2 = x^3 + a x + b over Q with nonzero discriminant.
class CurveQ {
 public:
  CurveQ(BigRational a, BigRational b);
  /// Parses "a,b".
  static CurveQ parse(const std::string& text);

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  /// -16 (4a^3 + 27b^2).
  const BigRational& discriminant() const { return disc_; }
  /// -1728 (4a)^3 / discriminant.
  const BigRational& j_invariant() const { return j_; }
  bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }
  const Weierstrass<BigRational>& law() const { return law_; }
  bool on_curve(const PointQ& p) const { return law_.on_curve(p); }
  PointQ add(const PointQ& p, const PointQ& q) const { return law_.add(p, q); }
  PointQ neg(const PointQ& p) const { return law_.neg(p); }
  std::string to_string() const;

 private:
  BigRational a_, b_, disc_, j_;
  Weierstrass<BigRational> law_;
};

/// [n]P.
PointQ point_mul(const CurveQ& e, const PointQ& p, long n);

/// Good reduction of a curve at p over F_{p^f}, f in {1, 2}.
struct CurveFp {
  std::uint64_t p = 0;
  int f = 1;
  Weierstrass<FqElement> law;
  FqElement j;

  bool on_curve(const PointFq& pt) const { return law.on_curve(pt); }
};

/// Reduction modulo a prime p >= 5 not dividing any coefficient denominator.
/// Throws PrimeTooSmall for p < 5 and BadReduction when p divides the discriminant.
CurveFp reduce_mod(const CurveQ& e, std::uint64_t p, int f = 1);

PointFq point_mul(const CurveFp& e, const PointFq& p, long n);

inline constexpr std::uint64_t kPointCountLimit = 1000000;

struct PointCount {
  std::uint64_t count = 0;
  long long a_p = 0;
};

/// #E(F_p) = p + 1 - a_p by a Legendre-symbol sum; requires f = 1 and p <= 10^6.
PointCount count_points(const CurveFp& e);

/// a_{p^2} = a_p^2 - 2p. Requires p >= 5 prime and |a_p| <= 2 sqrt(p).
long long trace_q(long long a_p, std::uint64_t p);

/// Polynomial in x whose roots are the x-coordinates of the nonzero points of
/// E[N] (full) or of the points of exact order N (primitive). 2 <= N <= 12.
Polynomial division_polynomial(const CurveQ& e, int n, bool primitive = false);

/// Polynomials f_n with psi_n = f_n (n odd) and psi_n = 2y f_n (n even).
Polynomial reduced_division_polynomial(const CurveQ& e, int n);

inline constexpr int kTorsionDegreeCap = 48;

/// Q(E[N]) with a basis (P1, P2) of E[N] and a root of the N-th cyclotomic
/// polynomial obtained as the Weil pairing e_N(P1, P2).
struct TorsionFieldHandle {
  int n = 0;
  FieldPtr field;
  PointK p1, p2;
  NFElement zeta;
  /// x-coordinates of the adjoined generators, in adjunction order.
  std::vector<std::string> steps;
};

/// Builds Q(E[N]) for N in {2, 3, 4, 5} by adjoining coordinates one at a
/// time, factoring over the current field. Verifies that all N^2 points
/// i P1 + j P2 are distinct N-torsion points on the curve (so the field is the
/// full, Galois, torsion field) and that e_N(P1, P2) is a root of Phi_N.
/// Throws DegreeCapExceeded when an adjunction would exceed `cap`.
TorsionFieldHandle torsion_field(const CurveQ& e, int n, int cap = kTorsionDegreeCap);

/// Weil pairing e_N(P, Q) = (-1)^N f_P(Q) / f_Q(P) by Miller's algorithm, for
/// independent N-torsion points over a field.
NFElement weil_pairing(const Weierstrass<NFElement>& law, const PointK& p, const PointK& q, int n);

/// Deterministic nonzero elements with small coordinates: sparse integer
/// combinations of the tower basis, occasionally divided by 2 or 3.
std::vector<NFElement> sample_field_elements(const TorsionFieldHandle& k, std::size_t count, std::uint64_t seed);
std::vector<NFElement> sample_field_elements(const FieldPtr& k, std::size_t count, std::uint64_t seed);

}  // namespace bogo
