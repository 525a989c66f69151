#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bogo/core/errors.hpp"
#include "bogo/core/modp.hpp"

namespace bogo::padic {

/// The element vanishes modulo p^k, so its valuation is not determined.
class BelowPrecision : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

inline constexpr int kDefaultPrecision = 20;

/// Z_{p^f} / p^k Z_{p^f} = (Z/p^k)[t]/(g) for the smallest monic g (coefficients
/// in [0, p), compared from t^{f-1} down to t^0) irreducible mod p.
class UnramifiedRing {
 public:
  /// Requires p^k < 2^62 and 1 <= f <= 8.
  static std::shared_ptr<const UnramifiedRing> make(std::uint64_t p, int f, int k = kDefaultPrecision);

  std::uint64_t p() const { return p_; }
  int f() const { return f_; }
  int k() const { return k_; }
  std::uint64_t modulus() const { return pk_; }
  /// Monic defining polynomial, ascending, length f + 1.
  const std::vector<std::uint64_t>& defining_poly() const { return g_; }
  /// Coordinates of tau^i, i < f, where tau is the root of g congruent to t^p.
  const std::vector<std::vector<std::uint64_t>>& frobenius_images() const { return frob_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return modp::add(a, b, pk_); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return modp::sub(a, b, pk_); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return modp::mul(a, b, pk_); }
  std::uint64_t from_int(long long v) const;
  /// Product of coordinate vectors modulo g.
  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;

 private:
  std::uint64_t p_ = 0, pk_ = 0;
  int f_ = 1, k_ = 1;
  std::vector<std::uint64_t> g_;
  std::vector<std::vector<std::uint64_t>> frob_;
};

using RingPtr = std::shared_ptr<const UnramifiedRing>;

class UElem {
 public:
  UElem() = default;
  UElem(RingPtr r, std::vector<std::uint64_t> coords);
  static UElem from_int(const RingPtr& r, long long v);
  /// The class of t.
  static UElem generator(const RingPtr& r);

  const RingPtr& ring() const { return r_; }
  const std::vector<std::uint64_t>& coords() const { return c_; }
  bool is_zero() const;
  /// True when the reduction mod p is nonzero.
  bool is_unit() const;

  UElem operator+(const UElem& o) const;
  UElem operator-(const UElem& o) const;
  UElem operator-() const;
  UElem operator*(const UElem& o) const;
  UElem& operator+=(const UElem& o) { return *this = *this + o; }
  UElem& operator-=(const UElem& o) { return *this = *this - o; }
  UElem& operator*=(const UElem& o) { return *this = *this * o; }
  bool operator==(const UElem& o) const { return c_ == o.c_; }
  bool operator!=(const UElem& o) const { return c_ != o.c_; }

  UElem pow(std::uint64_t e) const;
  /// Inverse of a unit; throws DomainError otherwise.
  UElem inverse() const;
  /// p^s * this, s >= 0.
  UElem shifted(int s) const;
  /// Reduction modulo p, coordinates in [0, p).
  std::vector<std::uint64_t> residue() const;
  std::string to_string() const;

 private:
  RingPtr r_;
  std::vector<std::uint64_t> c_;
};

inline UElem field_one(const UElem& x) { return UElem::from_int(x.ring(), 1); }
inline bool field_is_zero(const UElem& x) { return x.is_zero(); }

/// Largest v with x = 0 mod p^v; throws BelowPrecision when x = 0 mod p^k.
int valuation(const UElem& x);

/// Lift of the p-power Frobenius: the ring automorphism sending t to tau.
UElem frobenius(const UElem& x, int times = 1);

/// The root of unity of order dividing p^f - 1 congruent to x mod p.
UElem teichmuller(const UElem& x);

/// Hensel-lifted square root of x from an approximate root r0 mod p.
UElem sqrt_lift(const UElem& x, const UElem& r0);

/// Nonzero element p^e * u of Q_{p^f} with u a unit.
struct PadicNumber {
  int e = 0;
  UElem unit;

  int valuation() const { return e; }
};

/// Sample `index` of the stream `seed`: p^e u with u a uniform unit and e
/// uniform in [e_min, e_max].
PadicNumber sample_padic(const RingPtr& r, int e_min, int e_max, std::uint64_t seed, std::uint64_t index);

struct Metric2Result {
  /// v(phi_q(a) - a^q), or a certified lower bound when the difference vanishes
  /// to working precision.
  int lhs_valuation = 0;
  bool lhs_exact = true;
  /// 1 + min(0, v(phi_q a)) + q min(0, v(a)).
  int rhs_valuation = 0;
  bool passed = false;
  /// The difference vanished to precision and the lower bound does not reach rhs.
  bool vacuous = false;
  bool inverse_branch_used = false;
  /// For non-integral a: v(phi_q(1/a) - a^-q) >= 1 and the two valuations agree
  /// through phi_q(a) - a^q = -phi_q(a) a^q (phi_q(1/a) - a^-q).
  bool inverse_branch_ok = true;
  std::string note;
};

/// |phi_q(a) - a^q|_p <= p^-1 max(1, |phi_q a|_p) max(1, |a|_p)^q, q = p^2,
/// compared in the value group.
Metric2Result check_metric2(const PadicNumber& a, bool include_inverse_branch = true);

/// v(zeta_p - 1) from the Newton polygon of Phi_p(x + 1), as a fraction num/den.
std::pair<long, long> cyclotomic_valuation(std::uint64_t p);

}  // namespace bogo::padic
