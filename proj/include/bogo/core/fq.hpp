#pragma once

#include <cstdint>
#include <string>

#include "bogo/core/modp.hpp"

namespace bogo {

/// Element of F_p (f = 1) or F_{p^2} = F_p[s]/(s^2 - eps) (f = 2), where eps is
/// the smallest quadratic non-residue mod p. p must be an odd prime for f = 2.
class FqElement {
 public:
  FqElement() = default;
  FqElement(std::uint64_t p, int f, std::uint64_t c0, std::uint64_t c1 = 0);

  static FqElement from_int(std::uint64_t p, int f, long long v);

  std::uint64_t p() const { return p_; }
  int f() const { return f_; }
  std::uint64_t c0() const { return c0_; }
  std::uint64_t c1() const { return c1_; }
  std::uint64_t nonresidue() const { return eps_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }

  FqElement operator-() const;
  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator/(const FqElement& o) const { return *this * o.inverse(); }
  FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
  FqElement& operator-=(const FqElement& o) { return *this = *this - o; }
  FqElement& operator*=(const FqElement& o) { return *this = *this * o; }
  bool operator==(const FqElement& o) const { return p_ == o.p_ && f_ == o.f_ && c0_ == o.c0_ && c1_ == o.c1_; }
  bool operator!=(const FqElement& o) const { return !(*this == o); }

  FqElement inverse() const;
  FqElement pow(std::uint64_t e) const;
  FqElement zero() const { return FqElement(p_, f_, 0); }
  FqElement one() const { return FqElement(p_, f_, 1); }
  /// Whether the element is a square in its field.
  bool is_square() const;
  std::string to_string() const;

 private:
  std::uint64_t p_ = 0;
  int f_ = 1;
  std::uint64_t eps_ = 0;
  std::uint64_t c0_ = 0, c1_ = 0;
};

}  // namespace bogo
