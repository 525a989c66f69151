#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bogo/core/integer.hpp"

namespace bogo {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, int degree);
  static Polynomial x() { return monomial(1, 1); }
  /// Accepts e.g. "x^3-2", "3*x^4 + 6x^2 - 1", "x^50-2".
  static Polynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int i) const;
  BigRational leading() const;

  BigRational operator()(const BigRational& x) const;
  template <typename C>
  C eval(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + C(it->get_d());
    return acc;
  }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer polynomial with positive leading coefficient and content 1.
  Polynomial primitive() const;
  /// Coefficients of primitive(), as integers.
  std::vector<BigInt> integer_coeffs() const;
  /// x^deg * f(1/x).
  Polynomial reversed() const;
  /// f(c*x).
  Polynomial scaled(const BigRational& c) const;
  Polynomial compose(const Polynomial& inner) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial pow(unsigned e) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's square-free decomposition: f = c * prod g_i^i with g_i monic, square-free
/// and pairwise coprime. Returns (g_i, i) for the nonconstant g_i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

/// Product of the distinct monic irreducible factors of f.
Polynomial squarefree_part(const Polynomial& f);

/// n-th cyclotomic polynomial.
Polynomial cyclotomic(int n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace bogo
