#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bogo/core/complex_roots.hpp"
#include "bogo/core/rng.hpp"
#include "bogo/nt/neron_tate.hpp"

namespace bogo::nt {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

Complex agm(Complex a, Complex b) {
  for (int it = 0; it < 200; ++it) {
    Complex a1 = 0.5 * (a + b), b1 = std::sqrt(a * b);
    if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
    a = a1;
    b = b1;
    if (std::abs(a - b) <= 1e-14 * std::abs(a)) return 0.5 * (a + b);
  }
  throw PrecisionError("AGM did not converge");
}

double sigma(int n, int k) {
  double s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += std::pow(d, k);
  return s;
}

/// g2, g3 of the lattice Z w1 + Z w2 (Im(w2/w1) > 0) by Eisenstein series.
std::pair<Complex, Complex> invariants(Complex w1, Complex tau) {
  const Complex q = std::exp(kTwoPiI * tau);
  Complex e4 = 1.0, e6 = 1.0, qn = 1.0;
  for (int n = 1; n < 200; ++n) {
    qn *= q;
    if (std::abs(qn) * std::pow(n, 6) < 1e-18) break;
    e4 += 240.0 * sigma(n, 3) * qn;
    e6 -= 504.0 * sigma(n, 5) * qn;
  }
  const Complex c = 2.0 * kPi / w1;
  return {std::pow(c, 4) / 12.0 * e4, std::pow(c, 6) / 216.0 * e6};
}

/// Reduces (w1, w2) so that tau lies in the standard fundamental domain.
void reduce_basis(Complex& w1, Complex& w2) {
  if ((w2 / w1).imag() < 0) w2 = -w2;
  for (int it = 0; it < 1000; ++it) {
    Complex tau = w2 / w1;
    const double m = std::round(tau.real());
    if (m != 0) {
      w2 -= m * w1;
      tau = w2 / w1;
    }
    if (std::norm(tau) < 1.0 - 1e-14) {
      std::swap(w1, w2);
      w2 = -w2;
      continue;
    }
    return;
  }
  throw PrecisionError("lattice reduction did not terminate");
}

/// w = z / w1 moved to 0 <= Im w < Im tau and -1/2 <= Re w < 1/2.
Complex normalize(const LatticeData& l, Complex z) {
  Complex w = z / l.w1;
  const double n = std::floor(w.imag() / l.tau.imag());
  w -= n * l.tau;
  w -= std::floor(w.real() + 0.5);
  return w;
}

/// P and P' on C / (Z + Z tau) at w.
std::pair<Complex, Complex> wp_normalized(const LatticeData& l, Complex w) {
  const Complex q = l.q, u = std::exp(kTwoPiI * w), ui = 1.0 / u;
  auto f0 = [](Complex t) { return t / ((1.0 - t) * (1.0 - t)); };
  auto f1 = [](Complex t) { return t * (1.0 + t) / ((1.0 - t) * (1.0 - t) * (1.0 - t)); };
  Complex p = 1.0 / 12.0 + f0(u), dp = f1(u), qn = 1.0;
  for (int n = 1; n < 400; ++n) {
    qn *= q;
    const Complex a = qn * u, b = qn * ui;
    p += f0(a) + f0(b) - 2.0 * qn / ((1.0 - qn) * (1.0 - qn));
    dp += f1(a) - f1(b);
    if (std::abs(qn) * std::max(1.0, std::abs(ui)) < 1e-18) break;
  }
  const Complex c = kTwoPiI;
  return {c * c * p, c * c * c * dp};
}

}  // namespace

LatticeData periods(const CurveQ& e) {
  Polynomial f = Polynomial::monomial(1, 3) + Polynomial::monomial(e.a(), 1) + Polynomial::constant(e.b());
  std::vector<Complex> roots;
  for (const auto& r : complex_roots(f)) roots.push_back(r.ball.center);
  if (roots.size() != 3) throw DomainError("singular curve");
  const Complex g2 = -4.0 * e.a().get_d(), g3 = -4.0 * e.b().get_d();
  std::array<int, 3> idx{0, 1, 2};
  LatticeData best;
  best.roundtrip_error = INFINITY;
  do {
    const Complex e1 = roots[idx[0]], e2 = roots[idx[1]], e3 = roots[idx[2]];
    Complex w1 = kPi / agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2));
    Complex w2 = Complex(0, 1) * kPi / agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3));
    if (std::abs((w2 / w1).imag()) < 1e-8) continue;
    reduce_basis(w1, w2);
    const Complex tau = w2 / w1;
    auto [h2, h3] = invariants(w1, tau);
    const double scale = std::max(std::abs(g2), std::abs(g3));
    const double err = std::max(std::abs(h2 - g2), std::abs(h3 - g3)) / std::max(scale, 1e-300);
    if (err < best.roundtrip_error) best = LatticeData{w1, w2, tau, std::exp(kTwoPiI * tau), err};
  } while (std::next_permutation(idx.begin(), idx.end()));
  if (!(best.roundtrip_error <= 1e-10)) throw PrecisionError("period lattice failed the g2/g3 round trip");
  return best;
}

Complex weierstrass_p(const LatticeData& l, Complex z) {
  return wp_normalized(l, normalize(l, z)).first / (l.w1 * l.w1);
}

Complex weierstrass_dp(const LatticeData& l, Complex z) {
  return wp_normalized(l, normalize(l, z)).second / (l.w1 * l.w1 * l.w1);
}

Complex elliptic_log(const LatticeData& l, Complex x, Complex y) {
  const Complex w1 = l.w1;
  auto residual = [&](Complex w) {
    auto [p, dp] = wp_normalized(l, w);
    p /= w1 * w1;
    dp /= w1 * w1 * w1;
    return std::abs(p - x) / std::max(1.0, std::abs(x)) + std::abs(dp - 2.0 * y) / std::max(1.0, std::abs(y));
  };
  auto newton = [&](Complex w) {
    for (int it = 0; it < 60; ++it) {
      auto [p, dp] = wp_normalized(l, w);
      const Complex step = (p / (w1 * w1) - x) / (dp / (w1 * w1 * w1)) / w1;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      w -= step;
      w = normalize(l, w * w1);
      if (std::abs(step) < 1e-15) break;
    }
    return w;
  };
  Complex best = 0.0;
  double best_res = INFINITY;
  const int grid = 8;
  for (int i = 0; i < grid && best_res > 1e-12; ++i)
    for (int j = 0; j < grid && best_res > 1e-12; ++j) {
      Complex w = newton((i + 0.5) / grid - 0.5 + (j + 0.5) / grid * l.tau);
      for (Complex cand : {w, -w}) {
        cand = normalize(l, cand * w1);
        const double r = residual(cand);
        if (r < best_res) best_res = r, best = cand;
      }
    }
  // Half periods: P' vanishes and Newton only converges linearly.
  for (Complex h : {Complex(0.5), 0.5 * l.tau, 0.5 + 0.5 * l.tau}) {
    const double r = residual(normalize(l, h * w1));
    if (r < best_res) best_res = r, best = normalize(l, h * w1);
  }
  if (!(best_res < 1e-9)) throw PrecisionError("elliptic logarithm did not converge");
  return best * w1;
}

double lambda_arch_z(const LatticeData& l, Complex z) {
  const Complex w = normalize(l, z);
  const double im_tau = l.tau.imag();
  const Complex u = std::exp(kTwoPiI * w), ui = 1.0 / u;
  if (std::abs(1.0 - u) < 1e-300 && std::abs(w.imag()) < 1e-300) throw DomainError("lambda at the origin");
  const double log_q = -2.0 * kPi * im_tau;
  double s = -0.5 * b2(w.imag() / im_tau) * log_q - std::log(std::abs(1.0 - u));
  Complex qn = 1.0;
  for (int n = 1; n < 400; ++n) {
    qn *= l.q;
    s -= std::log(std::abs((1.0 - qn * u) * (1.0 - qn * ui)));
    if (std::abs(qn) * std::max(1.0, std::abs(ui)) < 1e-17) break;
  }
  return s;
}

double lambda_arch(const CurveQ& e, const PointQ& p) {
  if (p.infinity) throw DomainError("lambda at the origin");
  if (!e.on_curve(p)) throw DomainError("point is not on the curve");
  LatticeData l = periods(e);
  return lambda_arch_z(l, elliptic_log(l, p.x.get_d(), p.y.get_d()));
}

HaarEstimate haar_integral_lambda(const CurveQ& e, std::uint64_t samples, std::uint64_t seed) {
  LatticeData l = periods(e);
  const std::uint64_t chunk = 1000;
  std::vector<double> sums, sq;
  for (std::uint64_t start = 0, c = 0; start < samples; start += chunk, ++c) {
    Rng rng = substream(seed, c);
    double s = 0, s2 = 0;
    for (std::uint64_t i = start; i < std::min(samples, start + chunk); ++i) {
      const double a = uniform01(rng), b = uniform01(rng);
      const Complex z = (a + b * l.tau) * l.w1;
      if (a == 0.0 && b == 0.0) continue;
      const double v = lambda_arch_z(l, z);
      s += v;
      s2 += v * v;
    }
    sums.push_back(s);
    sq.push_back(s2);
  }
  // Pairwise reduction, independent of how chunks are scheduled.
  auto pairwise = [](std::vector<double> v) {
    if (v.empty()) return 0.0;
    while (v.size() > 1) {
      std::vector<double> next;
      for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
      if (v.size() % 2) next.push_back(v.back());
      v.swap(next);
    }
    return v[0];
  };
  HaarEstimate out;
  out.samples = samples;
  const double n = static_cast<double>(samples);
  out.mean = pairwise(sums) / n;
  const double var = std::max(0.0, pairwise(sq) / n - out.mean * out.mean);
  out.stderr_ = std::sqrt(var / n);
  return out;
}

BigRational integral_b2() {
  // [y^3/3 - y^2/2 + y/6] from 0 to 1.
  return BigRational(1, 3) - BigRational(1, 2) + BigRational(1, 6);
}

}  // namespace bogo::nt
