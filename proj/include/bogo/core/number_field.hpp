#pragma once

#include <memory>
#include <vector>

#include "bogo/core/charpoly.hpp"
#include "bogo/core/polynomial.hpp"

namespace bogo {

class NumberField;
class NFElement;
using FieldPtr = std::shared_ptr<const NumberField>;
/// Polynomial over a number field, ascending coefficients, no trailing zeros.
using NFPoly = std::vector<NFElement>;

/// A finite tower Q = K_0 < K_1 < ... < K_r with K_i = K_{i-1}[t_i]/(g_i),
/// g_i monic over K_{i-1}. Elements are flat coordinate vectors over Q in the
/// monomial basis t_1^{i_1} ... t_r^{i_r}, index i_1 + d_1 (i_2 + d_2 (...)).
/// A level may be marked as an algebra (g_i not known to be irreducible);
/// inversion there fails on zero divisors.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr rationals();
  /// Q[x]/(g) with g irreducible over Q (checked unless trusted).
  static FieldPtr simple(const Polynomial& g, bool trusted = false);
  /// base[t]/(g), g monic of degree >= 1 over base. Irreducibility is the
  /// caller's claim when is_field is set.
  static FieldPtr extend(const FieldPtr& base, const NFPoly& g, bool is_field);

  int degree() const { return degree_; }
  int relative_degree() const { return rel_degree_; }
  int levels() const { return base_ ? base_->levels() + 1 : 0; }
  bool is_field() const { return is_field_ && (!base_ || base_->is_field()); }
  const FieldPtr& base() const { return base_; }
  /// Relative defining polynomial over base(), monic.
  const NFPoly& relative_polynomial() const { return rel_poly_; }
  /// Whether `other` is this field or one of its ancestors.
  bool contains_field(const NumberField& other) const;

  NFElement zero() const;
  NFElement one() const;
  NFElement from_rational(const BigRational& c) const;
  /// The generator t of the top level.
  NFElement generator() const;
  /// Element with the given flat coordinates.
  NFElement element(std::vector<BigRational> coords) const;
  /// Image of an element of an ancestor field.
  NFElement embed(const NFElement& x) const;
  /// Q-linear map x -> e*x on the flat basis.
  RationalMatrix multiplication_matrix(const NFElement& e) const;

 private:
  friend class NFElement;
  NumberField() = default;

  void mul_into(const BigRational* a, const BigRational* b, BigRational* out) const;
  std::vector<BigRational> inverse_coords(const std::vector<BigRational>& a) const;

  FieldPtr base_;
  NFPoly rel_poly_;
  int rel_degree_ = 1;
  int degree_ = 1;
  bool is_field_ = true;
};

class NFElement {
 public:
  NFElement() = default;

  const FieldPtr& field() const { return field_; }
  const std::vector<BigRational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  BigRational rational_value() const;
  /// Coefficients over the base field, in the top-level variable.
  std::vector<NFElement> relative_coords() const;

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator*=(const BigRational& c);
  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator*(NFElement a, const BigRational& c) { return a *= c; }
  friend NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }
  friend bool operator==(const NFElement& a, const NFElement& b);
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

  /// Throws DomainError on zero or on a zero divisor of an algebra level.
  NFElement inverse() const;
  NFElement pow(long e) const;

 private:
  friend class NumberField;
  NFElement(FieldPtr f, std::vector<BigRational> c) : field_(std::move(f)), coords_(std::move(c)) {}
  /// Brings both operands to the larger of the two towers.
  void align(NFElement& o);

  FieldPtr field_;
  std::vector<BigRational> coords_;
};

/// Monic minimal polynomial over Q of an element of a field (not an algebra).
/// The characteristic polynomial of multiplication by e is m^(D/deg m); m is
/// recovered as its exact (D/deg m)-th root.
Polynomial nf_min_poly(const NFElement& e);

/// Characteristic polynomial over Q of multiplication by e.
Polynomial nf_charpoly(const NFElement& e);

namespace nfpoly {

void trim(NFPoly& f);
inline int degree(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }
NFPoly from_rational(const FieldPtr& k, const Polynomial& f);
NFPoly add(const NFPoly& a, const NFPoly& b);
NFPoly sub(const NFPoly& a, const NFPoly& b);
NFPoly mul(const NFPoly& a, const NFPoly& b);
NFPoly scale(const NFPoly& a, const NFElement& c);
std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b);
NFPoly monic(const NFPoly& a);
NFPoly gcd(const NFPoly& a, const NFPoly& b);
NFPoly derivative(const NFPoly& a);
NFElement eval(const NFPoly& f, const NFElement& x);
/// Polynomial with rational coefficients evaluated at an element.
NFElement eval(const Polynomial& f, const NFElement& x);

/// Factorization of a square-free polynomial over a field tower into monic
/// irreducibles, via the characteristic polynomial over Q of a primitive
/// element of K[X]/(f).
std::vector<NFPoly> factor_squarefree(const NFPoly& f, std::uint64_t seed = 1);

}  // namespace nfpoly
}  // namespace bogo
