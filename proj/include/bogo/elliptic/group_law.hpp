#pragma once

#include "bogo/core/errors.hpp"
#include "bogo/core/fq.hpp"
#include "bogo/core/integer.hpp"
#include "bogo/core/number_field.hpp"

namespace bogo {

inline BigRational field_one(const BigRational&) { return 1; }
inline FqElement field_one(const FqElement& x) { return x.one(); }
inline NFElement field_one(const NFElement& x) { return x.field()->one(); }
inline bool field_is_zero(const BigRational& x) { return x == 0; }
inline bool field_is_zero(const FqElement& x) { return x.is_zero(); }
inline bool field_is_zero(const NFElement& x) { return x.is_zero(); }

template <class F>
F field_int(const F& like, long n) {
  F one = field_one(like);
  F r = one - one;
  F base = n < 0 ? F(r - one) : one;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  F acc = base;
  while (m) {
    if (m & 1) r = r + acc;
    acc = acc + acc;
    m >>= 1;
  }
  return r;
}

/// Affine point or the point at infinity.
template <class F>
struct Point {
  bool infinity = true;
  F x{}, y{};

  static Point at_infinity() { return Point(); }
  static Point affine(F x0, F y0) { return Point{false, std::move(x0), std::move(y0)}; }
  friend bool operator==(const Point& p, const Point& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
};

/// y^2 = x^3 + a x + b over a field F.
template <class F>
struct Weierstrass {
  F a, b;

  F rhs(const F& x) const { return x * x * x + a * x + b; }

  bool on_curve(const Point<F>& p) const { return p.infinity || p.y * p.y == rhs(p.x); }

  Point<F> neg(const Point<F>& p) const {
    if (p.infinity) return p;
    return Point<F>::affine(p.x, F(p.y - p.y - p.y));
  }

  Point<F> add(const Point<F>& p, const Point<F>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F lambda;
    if (p.x == q.x) {
      if (field_is_zero(F(p.y + q.y))) return Point<F>::at_infinity();
      F three = field_int(a, 3);
      lambda = (three * p.x * p.x + a) / (p.y + p.y);
    } else {
      lambda = (q.y - p.y) / (q.x - p.x);
    }
    F x3 = lambda * lambda - p.x - q.x;
    F y3 = lambda * (p.x - x3) - p.y;
    return Point<F>::affine(std::move(x3), std::move(y3));
  }

  Point<F> dbl(const Point<F>& p) const { return add(p, p); }

  Point<F> mul(const Point<F>& p, long n) const {
    if (n < 0) return neg(mul(p, -n));
    Point<F> result = Point<F>::at_infinity(), base = p;
    while (n) {
      if (n & 1) result = add(result, base);
      n >>= 1;
      if (n) base = dbl(base);
    }
    return result;
  }
};

}  // namespace bogo
