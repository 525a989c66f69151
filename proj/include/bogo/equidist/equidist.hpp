#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bogo/core/errors.hpp"
#include "bogo/elliptic/elliptic.hpp"
#include "bogo/heights/heights.hpp"

namespace bogo::equidist {

using Complex = std::complex<double>;

/// min(m, max(-m, log|z - 1|)), and -m at z = 1. Throws DomainError at z = 0.
double f_m(Complex z, int m);

struct CircleIntegral {
  double value = 0.0;
  /// Sum of |K31 - G15| over the final pieces.
  double error = 0.0;
};

/// Integral over s in [0, 1] of g(s), where g(s) usually stands for
/// f(e^{2 pi i s}). The interval is split at the breakpoints and each piece is
/// refined adaptively; throws PrecisionError when the estimate exceeds tol.
CircleIntegral circle_integral(const std::function<double(double)>& g, double tol = 1e-8,
                               std::vector<double> breakpoints = {});

/// The integral of f_m(e^{2 pi i s}), split where the clipping at -m starts.
CircleIntegral integral_f_m(int m, double tol = 1e-10);

/// The integral of log|e^{2 pi i s} - 1|.
CircleIntegral integral_log(double tol = 1e-8);

struct TruncationParams {
  int m = 0;
  double c = 0.0;
  double integral = 0.0;
  /// log(1 + 2 e^{-m}).
  double log_term = 0.0;

  bool satisfied() const { return integral < c / 2 && log_term <= c / 2; }
};

inline constexpr int kMaxTruncation = 60;

/// Smallest m >= 1 with integral of f_m < c/2 and log(1 + 2 e^{-m}) <= c/2.
TruncationParams choose_m(double c);

struct DiscrepancyReport {
  std::string subject;
  double average = 0.0;
  double integral = 0.0;
  double discrepancy = 0.0;
  std::size_t count = 0;
  double height = 0.0;
  /// False for roots of unity, which the equidistribution statement excludes.
  bool applicable = true;
};

/// Average of f_m over all conjugates of alpha against the circle integral.
DiscrepancyReport bilu_discrepancy(const AlgebraicNumber& alpha, int m);

struct FiberStep {
  int k = 0;
  std::size_t points = 0;
  /// Canonical height of the division points, h(P0) / 4^k.
  double height = 0.0;
  /// Sum over bins of (p_i - 1/B)^2 / (1/B), p_i the fraction of points in bin i.
  double chi_square = 0.0;
  std::vector<std::size_t> histogram;
};

/// The 4^k points z with 2^k z = log P0 modulo the lattice, binned on a
/// sqrt(bins) x sqrt(bins) grid in period coordinates. bins must be a square,
/// k_max <= 8.
std::vector<FiberStep> suz_fiber_demo(const CurveQ& e, const PointQ& p0, int k_max, int bins);

}  // namespace bogo::equidist
