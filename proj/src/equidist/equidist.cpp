#include "bogo/equidist/equidist.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <queue>

#include "bogo/nt/neron_tate.hpp"

namespace bogo::equidist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxSubdivisions = 4000;

/// log|e^{2 pi i s} - 1| = log(2 sin(pi s)) on (0, 1).
double log_chord(double s) { return std::log(2.0 * std::sin(kPi * s)); }

}  // namespace

double f_m(Complex z, int m) {
  if (z == Complex(0.0, 0.0)) throw DomainError("f_m is not defined at 0");
  if (m < 1) throw DomainError("m must be positive");
  if (z == Complex(1.0, 0.0)) return -m;
  const double l = std::log(std::abs(z - 1.0));
  return std::min<double>(m, std::max<double>(-m, l));
}

CircleIntegral circle_integral(const std::function<double(double)>& g, double tol, std::vector<double> breakpoints) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  struct Piece {
    double lo, hi, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  auto rule = [&g](double lo, double hi) {
    const double k = GK::integrate(g, lo, hi, 0, 0.0, nullptr);
    const double gauss = boost::math::quadrature::gauss<double, 15>::integrate(g, lo, hi);
    return Piece{lo, hi, k, std::fabs(k - gauss)};
  };
  breakpoints.push_back(0.0);
  breakpoints.push_back(1.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  std::priority_queue<Piece> work;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = std::max(0.0, breakpoints[i]), hi = std::min(1.0, breakpoints[i + 1]);
    if (hi <= lo) continue;
    const Piece piece = rule(lo, hi);
    total_err += piece.error;
    work.push(piece);
  }
  // Global adaptive refinement: split the piece with the largest error estimate.
  for (int it = 0; it < kMaxSubdivisions && total_err > tol; ++it) {
    const Piece worst = work.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;
    work.pop();
    const Piece left = rule(worst.lo, mid), right = rule(mid, worst.hi);
    total_err += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
  }
  CircleIntegral out;
  std::vector<double> values;
  while (!work.empty()) {
    values.push_back(work.top().value);
    out.error += work.top().error;
    work.pop();
  }
  std::sort(values.begin(), values.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  for (double v : values) out.value += v;
  if (!(out.error <= tol)) throw PrecisionError("circle quadrature did not reach the tolerance");
  return out;
}

CircleIntegral integral_f_m(int m, double tol) {
  if (m < 1) throw DomainError("m must be positive");
  // Below s* the chord is shorter than e^{-m}; log 2 < m, so the upper clip never binds.
  const double s_star = std::asin(std::exp(-static_cast<double>(m)) / 2) / kPi;
  auto g = [m, s_star](double s) { return (s < s_star || s > 1 - s_star) ? -static_cast<double>(m) : log_chord(s); };
  return circle_integral(g, tol, {s_star, 0.5, 1 - s_star});
}

CircleIntegral integral_log(double tol) { return circle_integral(log_chord, tol, {0.5}); }

TruncationParams choose_m(double c) {
  if (!(c > 0)) throw DomainError("c must be positive");
  for (int m = 1; m <= kMaxTruncation; ++m) {
    TruncationParams t{m, c, integral_f_m(m).value, std::log1p(2 * std::exp(-static_cast<double>(m)))};
    if (t.satisfied()) return t;
  }
  throw GuardViolation("no truncation level up to " + std::to_string(kMaxTruncation));
}

DiscrepancyReport bilu_discrepancy(const AlgebraicNumber& alpha, int m) {
  if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  DiscrepancyReport r;
  r.subject = "conjugates of the root of " + alpha.min_poly().to_string();
  r.applicable = !is_root_of_unity(alpha).has_value();
  r.height = weil_height(alpha).total;
  r.count = alpha.conjugates().size();
  double s = 0;
  for (const auto& c : alpha.conjugates()) s += f_m(c.center, m);
  r.average = s / static_cast<double>(r.count);
  r.integral = integral_f_m(m).value;
  r.discrepancy = std::fabs(r.average - r.integral);
  return r;
}

std::vector<FiberStep> suz_fiber_demo(const CurveQ& e, const PointQ& p0, int k_max, int bins) {
  if (k_max < 0 || k_max > 8) throw DomainError("k_max must lie in [0, 8]");
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(bins))));
  if (bins < 1 || side * side != bins) throw DomainError("bins must be a positive square");
  if (p0.infinity) throw DomainError("P0 must be a non-torsion point");
  const double h0 = nt::nt_height_limit(e, p0).value;
  if (h0 <= 0) throw DomainError("P0 must be a non-torsion point");

  const nt::LatticeData l = nt::periods(e);
  const Complex z0 = nt::elliptic_log(l, p0.x.get_d(), p0.y.get_d());
  // Period coordinates of z0: z0 = (s0 + t0 tau) w1.
  const Complex w = z0 / l.w1;
  const double t0 = w.imag() / l.tau.imag();
  const double s0 = w.real() - t0 * l.tau.real();
  auto frac = [](double x) { return x - std::floor(x); };

  std::vector<FiberStep> out;
  for (int k = 0; k <= k_max; ++k) {
    FiberStep step;
    step.k = k;
    const long n = 1L << k;
    step.points = static_cast<std::size_t>(n * n);
    step.height = h0 / std::pow(4.0, k);
    step.histogram.assign(static_cast<std::size_t>(bins), 0);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const double s = frac((frac(s0) + static_cast<double>(i)) / static_cast<double>(n));
        const double t = frac((frac(t0) + static_cast<double>(j)) / static_cast<double>(n));
        const int bs = std::min(side - 1, static_cast<int>(s * side));
        const int bt = std::min(side - 1, static_cast<int>(t * side));
        ++step.histogram[static_cast<std::size_t>(bs * side + bt)];
      }
    const double expect = 1.0 / bins;
    for (std::size_t c : step.histogram) {
      const double p = static_cast<double>(c) / static_cast<double>(step.points);
      step.chi_square += (p - expect) * (p - expect) / expect;
    }
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace bogo::equidist
