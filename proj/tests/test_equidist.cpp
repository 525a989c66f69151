#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bogo/equidist/equidist.hpp"
#include "bogo/primes/primes.hpp"

using namespace bogo;
using namespace bogo::equidist;

namespace {

constexpr double kPi = std::numbers::pi;

// Clausen function Cl2(t) = t - t log t + sum zeta(2k) t^(2k+1) / (k (2k+1) (2 pi)^(2k)), 0 < t < 2 pi.
double clausen2(double t) {
  double s = t - t * std::log(t);
  for (int k = 1; k < 40; ++k) {
    double zeta = k == 1 ? kPi * kPi / 6 : 0.0;
    if (k > 1)
      for (int n = 1; n < 2000; ++n) zeta += std::pow(n, -2.0 * k);
    s += zeta * std::pow(t, 2 * k + 1) / (k * (2.0 * k + 1) * std::pow(2 * kPi, 2 * k));
  }
  return s;
}

// Closed form of the f_m integral through the antiderivative -Cl2(2 pi s) / (2 pi) of log(2 sin pi s).
double f_m_integral_closed(int m) {
  const double s = std::asin(std::exp(-m) / 2) / kPi;
  return -2 * m * s + clausen2(2 * kPi * s) / kPi;
}

AlgebraicNumber root_of(const std::string& poly, Complex near = {1.0, 0.0}) {
  return AlgebraicNumber::from_min_poly(Polynomial::parse(poly), near);
}

}  // namespace

TEST_CASE("truncated logarithm") {
  CHECK(f_m(1.0, 1) == -1.0);
  CHECK(f_m(1.0 + std::exp(1.0), 1) == doctest::Approx(1.0));
  CHECK(f_m(1.0 + 10.0, 1) == 1.0);
  CHECK(f_m(2.0, 1) == 0.0);
  CHECK_THROWS_AS(f_m(0.0, 3), DomainError);
  Rng rng = substream(5, 0);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(uniform01(rng) * 8 - 4, uniform01(rng) * 8 - 4);
    const int m = static_cast<int>(uniform_int(rng, 1, 6));
    const double v = f_m(z, m), l = std::log(std::abs(z - 1.0));
    CHECK(std::fabs(v) <= m);
    if (std::fabs(l) <= m) CHECK(v == l);
    const Complex z2 = z + Complex(1e-3, -2e-3);
    CHECK(std::fabs(f_m(z2, m) - v) <= std::fabs(std::log(std::abs(z2 - 1.0)) - l) + 1e-15);
  }
}

TEST_CASE("circle integrals") {
  const CircleIntegral j = integral_log();
  CHECK(std::fabs(j.value) < 1e-6);
  CHECK(circle_integral([](double) { return 2.5; }).value == doctest::Approx(2.5).epsilon(1e-15));
  double prev = INFINITY;
  for (int m = 1; m <= 8; ++m) {
    const double v = integral_f_m(m).value;
    // f_m >= log|z - 1| on the circle, so the integral is positive and decreases to the Jensen value 0.
    CHECK(v > 0);
    CHECK(v < prev);
    CHECK(v == doctest::Approx(f_m_integral_closed(m)).epsilon(1e-9));
    prev = v;
  }
  CHECK(integral_f_m(1).value == doctest::Approx(0.117321810377256).epsilon(1e-10));
}

TEST_CASE("choice of the truncation level") {
  const double c = gap_constants(5).unramified;
  const TruncationParams t = choose_m(c);
  CHECK(t.m == 5);
  CHECK(t.satisfied());
  CHECK(t.log_term <= c / 2);
  CHECK(std::log1p(2 * std::exp(-4.0)) > c / 2);
  CHECK(choose_m(4.0).m == 1);
  int prev = 1;
  for (double cc = 4.0; cc > 1e-6; cc /= 1.7) {
    const TruncationParams u = choose_m(cc);
    CHECK(u.satisfied());
    CHECK(u.m >= prev);
    if (u.m > 1) {
      const double i = integral_f_m(u.m - 1).value, lt = std::log1p(2 * std::exp(-(u.m - 1.0)));
      CHECK_FALSE((i < cc / 2 && lt <= cc / 2));
    }
    prev = u.m;
  }
  CHECK_THROWS_AS(choose_m(0.0), DomainError);
}

TEST_CASE("Bilu discrepancy along 2^(1/n)") {
  double prev = INFINITY;
  for (int n : {50, 100, 200}) {
    const DiscrepancyReport r = bilu_discrepancy(root_of("x^" + std::to_string(n) + " - 2"), 1);
    CHECK(r.applicable);
    CHECK(r.count == static_cast<std::size_t>(n));
    CHECK(r.height == doctest::Approx(std::log(2.0) / n).epsilon(1e-9));
    CHECK(r.discrepancy < prev);
    prev = r.discrepancy;
  }
  CHECK(prev < 0.05);
  const DiscrepancyReport two = bilu_discrepancy(AlgebraicNumber::rational(2), 1);
  CHECK(two.discrepancy == doctest::Approx(std::fabs(f_m(2.0, 1) - integral_f_m(1).value)));
  const DiscrepancyReport phi = bilu_discrepancy(root_of("x^2 - x - 1"), 1);
  CHECK(phi.count == 2);
  CHECK(std::isfinite(phi.discrepancy));
  CHECK_FALSE(bilu_discrepancy(root_of("x^2 + x + 1", {-0.5, 0.8}), 1).applicable);
}

TEST_CASE("division points spread over the period parallelogram") {
  const CurveQ e(0, -2);
  const auto steps = suz_fiber_demo(e, PointQ::affine(BigRational(3), BigRational(5)), 6, 16);
  REQUIRE(steps.size() == 7);
  CHECK(steps[0].points == 1);
  for (std::size_t k = 1; k < steps.size(); ++k) {
    CHECK(steps[k].chi_square <= steps[k - 1].chi_square);
    CHECK(steps[k].height == doctest::Approx(steps[k - 1].height / 4));
    CHECK(steps[0].chi_square >= steps[k].chi_square);
  }
  CHECK(steps[0].chi_square == doctest::Approx(15.0));
  CHECK(steps[4].points == 256);
  for (std::size_t c : steps[4].histogram) CHECK(c == 16);
  CHECK_THROWS_AS(suz_fiber_demo(e, PointQ::affine(BigRational(3), BigRational(5)), 9, 16), DomainError);
  CHECK_THROWS_AS(suz_fiber_demo(e, PointQ::affine(BigRational(3), BigRational(5)), 3, 10), DomainError);
}
