#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bogo/core/errors.hpp"
#include "bogo/elliptic/elliptic.hpp"

namespace bogo::nt {

using Complex = std::complex<double>;

class UnsupportedReductionType : public DomainError {
 public:
  UnsupportedReductionType(std::uint64_t ell, const std::string& what)
      : DomainError("unsupported reduction at " + std::to_string(ell) + ": " + what), ell_(ell) {}
  std::uint64_t prime() const { return ell_; }

 private:
  std::uint64_t ell_;
};

class NotSplitMultiplicative : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Period lattice Z w1 + Z w2 of x = P(z), 2y = P'(z), with tau = w2 / w1 in
/// the standard fundamental domain.
struct LatticeData {
  Complex w1, w2, tau, q;
  /// max relative error of g2, g3 rebuilt from the lattice.
  double roundtrip_error = 0.0;
};

LatticeData periods(const CurveQ& e);

/// Weierstrass P and P' at z.
Complex weierstrass_p(const LatticeData& l, Complex z);
Complex weierstrass_dp(const LatticeData& l, Complex z);

/// z with (P(z), P'(z) / 2) = (x, y) for a point of E(C); throws PrecisionError
/// if Newton refinement does not reach 1e-9.
Complex elliptic_log(const LatticeData& l, Complex x, Complex y);

/// Archimedean local height at the image of z; z must not lie in the lattice.
double lambda_arch_z(const LatticeData& l, Complex z);
double lambda_arch(const CurveQ& e, const PointQ& p);

/// Local data at one prime: an integral model, minimal among those reachable by
/// the searched coordinate changes x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct LocalModel {
  std::uint64_t ell = 0;
  int k = 0;  // u = ell^k
  BigRational r, s, t;
  BigRational a1, a2, a3, a4, a6;
  int v_disc = 0;
  bool good = false;
  /// v(c4) = 0 with v(disc) > 0 (needs ell >= 5 here).
  bool multiplicative = false;
};

LocalModel local_model(const CurveQ& e, std::uint64_t ell);

/// (1/2) max(0, -v_p(x)) log p on the given model; throws BadReduction if the
/// model has bad reduction at p.
double lambda_good(const CurveQ& e, const PointQ& p, std::uint64_t ell);

struct TateData {
  std::uint64_t ell = 0;
  int v_q = 0;
  int precision = 0;
  /// q mod ell^precision.
  BigInt q;
  /// mu^2 = b c4(q) / (2 a c6(q)), ell^v_mu2 * unit.
  int v_mu2 = 0;
  BigInt mu2_unit;
  bool split = false;
};

/// Tate parameter from the fixed point q = q j(q) / j, at precision
/// 2|v(j)| + 20; requires v(j) < 0 and ell >= 5.
TateData tate_parameter(const CurveQ& e, std::uint64_t ell);

/// -(1/2) b2(log|u| / log|q|) log|q| - log|1 - u| for split multiplicative ell.
double lambda_split_mult(const CurveQ& e, const PointQ& p, std::uint64_t ell);

struct LimitResult {
  double value = 0.0;
  double error_bound = 0.0;
  int doublings = 0;
};

/// lim h(x(2^k P)) / (2 4^k); the normalized x-only doubling keeps the
/// archimedean size in floating point and the gcd exactly through valuations at
/// the primes where the doubling forms can share a factor.
LimitResult nt_height_limit(const CurveQ& e, const PointQ& p, double tol = 1e-10);

struct LocalHeightTerm {
  /// 0 for the infinite place; a residual term carries the product of the
  /// primes it covers.
  std::uint64_t place = 0;
  double lambda = 0.0;
  /// "archimedean", "good", "split-multiplicative" or "residual".
  std::string kind;
};

struct NTReport {
  double total = 0.0;
  std::vector<LocalHeightTerm> terms;
  /// "local-sum" or "residual".
  std::string method;
};

/// Sum of local heights over all places. With allow_residual, primes of
/// unsupported reduction type are covered by one residual term (limit minus the
/// implemented terms); otherwise they raise UnsupportedReductionType.
NTReport nt_height_local(const CurveQ& e, const PointQ& p, bool allow_residual = false);

/// lambda at ell (0 for the infinite place).
double partial_height(const CurveQ& e, const PointQ& p, std::uint64_t ell);

struct HaarEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
};

/// Monte Carlo mean of lambda_arch over z = s + t tau, (s, t) uniform on [0,1)^2.
HaarEstimate haar_integral_lambda(const CurveQ& e, std::uint64_t samples, std::uint64_t seed);

/// Exact integral of b2(y) = y^2 - y + 1/6 over [0, 1].
BigRational integral_b2();

/// b2(y) = y^2 - y + 1/6.
inline double b2(double y) { return y * y - y + 1.0 / 6.0; }

}  // namespace bogo::nt
