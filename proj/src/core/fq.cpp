#include "bogo/core/fq.hpp"

#include "bogo/core/errors.hpp"

namespace bogo {

FqElement::FqElement(std::uint64_t p, int f, std::uint64_t c0, std::uint64_t c1)
    : p_(p), f_(f), c0_(c0 % p), c1_(f == 2 ? c1 % p : 0) {
  if (f != 1 && f != 2) throw DomainError("extension degree must be 1 or 2");
  if (f == 2) {
    if (p == 2) throw DomainError("F_4 is not supported");
    eps_ = modp::smallest_nonresidue(p);
  }
}

FqElement FqElement::from_int(std::uint64_t p, int f, long long v) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return FqElement(p, f, static_cast<std::uint64_t>(r));
}

FqElement FqElement::operator-() const {
  FqElement r = *this;
  r.c0_ = modp::sub(0, c0_, p_);
  r.c1_ = modp::sub(0, c1_, p_);
  return r;
}

FqElement FqElement::operator+(const FqElement& o) const {
  FqElement r = *this;
  r.c0_ = modp::add(c0_, o.c0_, p_);
  r.c1_ = modp::add(c1_, o.c1_, p_);
  return r;
}

FqElement FqElement::operator-(const FqElement& o) const {
  FqElement r = *this;
  r.c0_ = modp::sub(c0_, o.c0_, p_);
  r.c1_ = modp::sub(c1_, o.c1_, p_);
  return r;
}

FqElement FqElement::operator*(const FqElement& o) const {
  FqElement r = *this;
  using modp::add;
  using modp::mul;
  r.c0_ = add(mul(c0_, o.c0_, p_), mul(eps_, mul(c1_, o.c1_, p_), p_), p_);
  r.c1_ = add(mul(c0_, o.c1_, p_), mul(c1_, o.c0_, p_), p_);
  return r;
}

FqElement FqElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_q");
  using modp::mul;
  // (c0 + c1 s)^-1 = (c0 - c1 s) / (c0^2 - eps c1^2).
  std::uint64_t n = modp::sub(mul(c0_, c0_, p_), mul(eps_, mul(c1_, c1_, p_), p_), p_);
  std::uint64_t ni = modp::inv(n, p_);
  FqElement r = *this;
  r.c0_ = mul(c0_, ni, p_);
  r.c1_ = mul(modp::sub(0, c1_, p_), ni, p_);
  return r;
}

FqElement FqElement::pow(std::uint64_t e) const {
  FqElement result = one(), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool FqElement::is_square() const {
  if (is_zero()) return true;
  if (f_ == 1) return modp::legendre(c0_, p_) == 1;
  // Squares in F_{p^2}: x^((p^2-1)/2) = 1, equivalently the norm is a square in F_p.
  std::uint64_t n = modp::sub(modp::mul(c0_, c0_, p_), modp::mul(eps_, modp::mul(c1_, c1_, p_), p_), p_);
  return modp::legendre(n, p_) == 1;
}

std::string FqElement::to_string() const {
  if (f_ == 1) return std::to_string(c0_);
  return std::to_string(c0_) + "+" + std::to_string(c1_) + "s";
}

}  // namespace bogo
