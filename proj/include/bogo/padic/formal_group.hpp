#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bogo/core/errors.hpp"
#include "bogo/elliptic/elliptic.hpp"
#include "bogo/padic/unramified.hpp"

namespace bogo::padic {

using bogo::field_int;
using bogo::field_is_zero;
using bogo::field_one;

class NotSupersingular : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr int kMaxSeriesPrecision = 64;

/// Power series in T modulo T^prec.
template <class R>
struct Series {
  std::vector<R> c;

  int prec() const { return static_cast<int>(c.size()); }
  static Series zero(const R& like, int prec) { return Series{std::vector<R>(static_cast<std::size_t>(prec), like - like)}; }
  static Series monomial(const R& coef, int deg, int prec) {
    Series s = zero(coef, prec);
    if (deg < prec) s.c[static_cast<std::size_t>(deg)] = coef;
    return s;
  }
  Series operator+(const Series& o) const {
    Series r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
    return r;
  }
  Series operator-() const { return zero(c[0], prec()) - *this; }
  Series operator*(const Series& o) const {
    Series r = zero(c[0], prec());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (field_is_zero(c[i])) continue;
      for (std::size_t j = 0; i + j < c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    return r;
  }
  Series scaled(const R& s) const {
    Series r = *this;
    for (auto& x : r.c) x = x * s;
    return r;
  }
  bool operator==(const Series& o) const { return c == o.c; }
};

/// Power series in T1, T2 modulo total degree prec; c[i][j] is the T1^i T2^j coefficient.
template <class R>
struct BiSeries {
  std::vector<std::vector<R>> c;

  int prec() const { return static_cast<int>(c.size()); }
  static BiSeries zero(const R& like, int prec) {
    BiSeries s;
    for (int i = 0; i < prec; ++i) s.c.emplace_back(static_cast<std::size_t>(prec - i), like - like);
    return s;
  }
  static BiSeries monomial(const R& coef, int i, int j, int prec) {
    BiSeries s = zero(coef, prec);
    if (i + j < prec) s.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coef;
    return s;
  }
  BiSeries operator+(const BiSeries& o) const {
    BiSeries r = *this;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j) r.c[i][j] = r.c[i][j] + o.c[i][j];
    return r;
  }
  BiSeries operator-(const BiSeries& o) const {
    BiSeries r = *this;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j) r.c[i][j] = r.c[i][j] - o.c[i][j];
    return r;
  }
  BiSeries operator-() const { return zero(c[0][0], prec()) - *this; }
  BiSeries operator*(const BiSeries& o) const {
    BiSeries r = zero(c[0][0], prec());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        if (field_is_zero(c[i][j])) continue;
        for (std::size_t k = 0; i + j + k < n; ++k)
          for (std::size_t l = 0; i + j + k + l < n; ++l) r.c[i + k][j + l] = r.c[i + k][j + l] + c[i][j] * o.c[k][l];
      }
    return r;
  }
  BiSeries scaled(const R& s) const {
    BiSeries r = *this;
    for (auto& row : r.c)
      for (auto& x : row) x = x * s;
    return r;
  }
  bool operator==(const BiSeries& o) const { return c == o.c; }
};

/// Formal group of y^2 = x^3 + a x + b in the parameter z = -x/y.
template <class R>
class FormalGroup {
 public:
  FormalGroup(R a, R b, int prec) : a_(std::move(a)), b_(std::move(b)), prec_(prec) {
    if (prec < 2 || prec > kMaxSeriesPrecision) throw GuardViolation("series precision must be in [2, 64]");
    // w = z^3 + a z w^2 + b w^3, by fixed-point iteration.
    const R one = field_one(a_);
    Series<R> z = Series<R>::monomial(one, 1, prec), z3 = Series<R>::monomial(one, 3, prec);
    Series<R> w = z3;
    for (int it = 0; it < prec; ++it) {
      Series<R> next = z3 + (z * w * w).scaled(a_) + (w * w * w).scaled(b_);
      if (next == w) break;
      w = next;
    }
    w_ = w;
  }

  const R& a() const { return a_; }
  const R& b() const { return b_; }
  int prec() const { return prec_; }
  /// w(z) = -1/y as a series in z.
  const Series<R>& w() const { return w_; }
  Series<R> T() const { return Series<R>::monomial(field_one(a_), 1, prec_); }

  /// F(s1, s2) for series without constant term.
  template <class S>
  S add(const S& z1, const S& z2) const {
    const R one = field_one(a_);
    const S unit = one_like(z1);
    // h_n = (z2^n - z1^n) / (z2 - z1), lambda = sum A_n h_n, nu = w(z1) - lambda z1.
    S h = unit, p1 = unit;
    S lambda = z1 - z1, w1 = z1 - z1;
    for (int n = 1; n <= prec_; ++n) {
      if (n > 1) h = z2 * h + p1;
      p1 = p1 * z1;
      if (n < prec_ && !field_is_zero(w_.c[static_cast<std::size_t>(n)])) {
        lambda = lambda + h.scaled(w_.c[static_cast<std::size_t>(n)]);
        w1 = w1 + p1.scaled(w_.c[static_cast<std::size_t>(n)]);
      }
    }
    S nu = w1 - lambda * z1;
    S l2 = lambda * lambda;
    S num = (lambda * nu).scaled(field_int(one, 2) * a_) + (l2 * nu).scaled(field_int(one, 3) * b_);
    S den = unit + l2.scaled(a_) + (l2 * lambda).scaled(b_);
    return z1 + z2 + num * inverse_one_plus(den - unit, unit);
  }

  Series<R> inverse(const Series<R>& s) const { return -s; }

  /// [m](T) by double-and-add.
  Series<R> multiply(long m) const {
    if (m < 0) return -multiply(-m);
    Series<R> acc = Series<R>::zero(a_, prec_), base = T();
    bool empty = true;
    while (m) {
      if (m & 1) {
        acc = empty ? base : add(acc, base);
        empty = false;
      }
      m >>= 1;
      if (m) base = add(base, base);
    }
    return acc;
  }

  /// [m](T) as F([m-1](T), T).
  Series<R> multiply_iterated(long m) const {
    if (m < 0) return -multiply_iterated(-m);
    Series<R> acc = Series<R>::zero(a_, prec_);
    for (long i = 0; i < m; ++i) acc = i == 0 ? T() : add(acc, T());
    return acc;
  }

  /// F(T1, T2) modulo total degree `prec`.
  BiSeries<R> law(int prec) const {
    const R one = field_one(a_);
    return add(BiSeries<R>::monomial(one, 1, 0, prec), BiSeries<R>::monomial(one, 0, 1, prec));
  }

 private:
  static Series<R> one_like(const Series<R>& s) { return Series<R>::monomial(field_one(s.c[0]), 0, s.prec()); }
  static BiSeries<R> one_like(const BiSeries<R>& s) { return BiSeries<R>::monomial(field_one(s.c[0][0]), 0, 0, s.prec()); }
  /// 1 / (1 + u) for u without constant term.
  template <class S>
  S inverse_one_plus(const S& u, const S& unit) const {
    S r = unit, term = unit;
    for (int i = 1; i < prec_; ++i) {
      term = -(term * u);
      r = r + term;
    }
    return r;
  }

  R a_, b_;
  int prec_;
  Series<R> w_;
};

/// Formal group over Q of an integral model; prec <= 64.
FormalGroup<BigRational> formal_group(const CurveQ& e, int prec);

struct LubinTateReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  int prec = 0;
  /// +1 or -1 when the T^q coefficient is congruent to it mod p, 0 otherwise.
  int sign = 0;
  bool low_vanish = false;
  /// Coefficients of T^i for q < i < prec vanish mod p.
  bool high_vanish = false;
  /// Residue of the T^q coefficient, coordinates over F_p.
  std::vector<std::uint64_t> coeff_q;
  /// Smallest i >= 1 with coefficient of T^i nonzero mod p (0 if none below prec).
  int first_nonzero = 0;
};

/// [p](T) mod p for a curve over Q with supersingular reduction at p >= 5;
/// prec >= p^2 + 1. Throws NotSupersingular when a_p != 0.
LubinTateReport lubin_tate_signature(const CurveQ& e, std::uint64_t p, int prec);

/// The same for y^2 = x^3 + a x + b over an unramified ring (no supersingularity gate).
LubinTateReport lubin_tate_signature(const UElem& a, const UElem& b, int prec);

/// Coefficients (a d^2, b d^3) of the quadratic twist by sqrt(d) over the ring,
/// where sqrt(d) is Hensel-lifted from the smallest residue square root.
std::pair<UElem, UElem> twist_by_sqrt(const CurveQ& e, long d, const RingPtr& ring);

}  // namespace bogo::padic
