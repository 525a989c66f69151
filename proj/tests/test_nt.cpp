#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bogo/nt/neron_tate.hpp"
#include "bogo/nt/corpus.hpp"

using namespace bogo;
using namespace bogo::nt;

namespace {

PointQ pt(long x, long y) { return PointQ::affine(BigRational(x), BigRational(y)); }

// 11a1 in short form with its 5-torsion points (5, 5) and (16, 60).
const CurveQ k11a(-13392, -1080432);
const PointQ t11_1 = pt(168, 1188), t11_2 = pt(564, 13068);
// 37a1 and 389a1 in short form.
const CurveQ k37a(-1296, 11664);
const CurveQ k389a(-3024, 46224);

// Laurent series of P at 0: 1/z^2 + sum c_k z^(2k-2).
Complex wp_laurent(double g2, double g3, Complex z) {
  std::vector<double> c(30, 0.0);
  c[2] = g2 / 20;
  c[3] = g3 / 28;
  for (int k = 4; k < 30; ++k) {
    double s = 0;
    for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
    c[k] = 3.0 * s / ((2 * k + 1) * (k - 3));
  }
  Complex r = 1.0 / (z * z);
  for (int k = 2; k < 30; ++k) r += c[k] * std::pow(z, 2 * k - 2);
  return r;
}

// The q-series for lambda with a fixed, generous number of terms.
double lambda_fixed_terms(const LatticeData& l, Complex z, int terms) {
  const double pi = std::numbers::pi;
  Complex w = z / l.w1;
  w -= std::floor(w.imag() / l.tau.imag()) * l.tau;
  const Complex u = std::exp(Complex(0, 2 * pi) * w);
  const double y = w.imag() / l.tau.imag();
  const double log_q = -2 * pi * l.tau.imag();
  double s = -0.5 * (y * y - y + 1.0 / 6) * log_q - std::log(std::abs(1.0 - u));
  for (int n = 1; n <= terms; ++n) {
    const Complex qn = std::pow(l.q, n);
    s -= std::log(std::abs((1.0 - qn * u) * (1.0 - qn / u)));
  }
  return s;
}

// a_p = p - #{(x, y) mod p} on a model with a node at p (1 split, -1 nonsplit).
long nodal_ap(const CurveQ& e, long p) {
  const BigInt P(p);
  auto red = [&](const BigRational& c) {
    BigInt inv, r;
    mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), P.get_mpz_t());
    r = c.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
    return r.get_si();
  };
  const long a = red(e.a()), b = red(e.b());
  long n = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if ((y * y - (x * x % p * x + a * x + b)) % p == 0) ++n;
  return p - n;
}

double log_abs_d(const BigRational& x) { return std::log(std::fabs(x.get_d())); }

}  // namespace

TEST_CASE("period lattice") {
  LatticeData sq = periods(CurveQ(-1, 0));
  CHECK(std::abs(sq.tau - Complex(0, 1)) < 1e-12);
  for (const CurveQ& e : {CurveQ(0, -2), CurveQ(-1, 0), k11a, k389a, CurveQ(5, 1)}) {
    LatticeData l = periods(e);
    CHECK(l.tau.imag() > 0);
    CHECK(std::abs(l.q) < 1);
    CHECK(l.roundtrip_error < 1e-10);
    CHECK(std::abs(l.tau.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(l.tau) >= 1 - 1e-12);
    // P near 0 against its Laurent series, and periodicity.
    const double g2 = -4 * e.a().get_d(), g3 = -4 * e.b().get_d();
    const Complex z = 0.07 * l.w1 * Complex(1, 0.3);
    const Complex ref = wp_laurent(g2, g3, z);
    CHECK(std::abs(weierstrass_p(l, z) - ref) / std::abs(ref) < 1e-10);
    CHECK(std::abs(weierstrass_p(l, z + l.w1 - 2.0 * l.w2) - ref) / std::abs(ref) < 1e-9);
    // P'^2 = 4 P^3 - g2 P - g3 at a generic point.
    const Complex z2 = 0.31 * l.w1 + 0.17 * l.w2;
    const Complex p = weierstrass_p(l, z2), dp = weierstrass_dp(l, z2);
    CHECK(std::abs(dp * dp - (4.0 * p * p * p - g2 * p - g3)) / std::abs(dp * dp) < 1e-9);
  }
}

TEST_CASE("elliptic logarithm inverts the parametrization") {
  for (const auto& [e, p] : std::vector<std::pair<CurveQ, PointQ>>{
           {CurveQ(0, -2), pt(3, 5)}, {k389a, pt(12, 108)}, {k11a, t11_1}, {CurveQ(-1, 0), pt(0, 0)}}) {
    LatticeData l = periods(e);
    const Complex z = elliptic_log(l, p.x.get_d(), p.y.get_d());
    CHECK(std::abs(weierstrass_p(l, z) - p.x.get_d()) < 1e-8 * std::max(1.0, std::fabs(p.x.get_d())));
    CHECK(std::abs(0.5 * weierstrass_dp(l, z) - p.y.get_d()) < 1e-8 * std::max(1.0, std::fabs(p.y.get_d())));
  }
}

TEST_CASE("archimedean local height") {
  SUBCASE("symmetry and series truncation") {
    for (const auto& pair : split_multiplicative_corpus(8, 11)) {
      const PointQ minus = pair.curve.neg(pair.point);
      CHECK(std::fabs(lambda_arch(pair.curve, pair.point) - lambda_arch(pair.curve, minus)) < 1e-12);
      LatticeData l = periods(pair.curve);
      const Complex z = elliptic_log(l, pair.point.x.get_d(), pair.point.y.get_d());
      CHECK(std::fabs(lambda_arch_z(l, z) - lambda_fixed_terms(l, z, 60)) < 1e-12);
      CHECK(std::fabs(lambda_fixed_terms(l, z, 60) - lambda_fixed_terms(l, z, 120)) < 1e-12);
    }
  }
  SUBCASE("quasi-parallelogram identity") {
    auto check = [](const CurveQ& e, const PointQ& p, const PointQ& q) {
      const double lhs = lambda_arch(e, e.add(p, q)) + lambda_arch(e, e.add(p, e.neg(q)));
      const double rhs = 2 * lambda_arch(e, p) + 2 * lambda_arch(e, q) - log_abs_d(p.x - q.x) +
                         log_abs_d(e.discriminant()) / 6;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    };
    check(k389a, pt(12, 108), pt(48, 108));
    check(CurveQ(0, -2), pt(3, 5), point_mul(CurveQ(0, -2), pt(3, 5), 2));
    // 2-torsion on y^2 = x^3 - x: P + Q = P - Q = (-1, 0).
    const CurveQ e(-1, 0);
    const double l0 = lambda_arch(e, pt(0, 0)), l1 = lambda_arch(e, pt(1, 0)), lm = lambda_arch(e, pt(-1, 0));
    CHECK(std::isfinite(l0));
    CHECK(2 * lm == doctest::Approx(2 * l0 + 2 * l1 - 0.0 + std::log(64.0) / 6).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lambda_arch(k389a, PointQ::at_infinity()), DomainError);
}

TEST_CASE("good reduction local heights") {
  // y^2 = x^3 + 15623 has good reduction at 5 and passes through (1/25, 15624/125).
  const CurveQ e(0, 15623);
  const PointQ p = PointQ::affine(BigRational(1, 25), BigRational(15624, 125));
  REQUIRE(e.on_curve(p));
  CHECK(lambda_good(e, p, 5) == doctest::Approx(std::log(5.0)));
  // (3/7, 1) on y^2 = x^3 + 316/343: a unit at 5.
  const CurveQ e2(0, BigRational(316, 343));
  const PointQ p2 = PointQ::affine(BigRational(3, 7), BigRational(1));
  REQUIRE(e2.on_curve(p2));
  CHECK(lambda_good(e2, p2, 5) == 0.0);
  CHECK_THROWS_AS(lambda_good(e2, p2, 7), BadReduction);
  CHECK(lambda_good(k389a, pt(12, 108), 7) == 0.0);
  CHECK_THROWS_AS(lambda_good(k389a, pt(12, 108), 389), BadReduction);
  // The short model of 389a1 is non-minimal at 2 and 3 only through u = 6.
  for (std::uint64_t ell : {2, 3}) {
    LocalModel m = local_model(k389a, ell);
    CHECK(m.good);
    CHECK(m.k == 1);
    CHECK(lambda_good(k389a, pt(12, 108), ell) == 0.0);
  }
  LocalModel m389 = local_model(k389a, 389);
  CHECK(m389.multiplicative);
  CHECK(m389.v_disc == 1);
}

TEST_CASE("split multiplicative local heights") {
  TateData t11 = tate_parameter(k11a, 11);
  CHECK(t11.v_q == 5);
  CHECK(t11.v_q == -valuation(k11a.j_invariant(), BigInt(11)));
  CHECK(t11.split);
  CHECK(t11.precision == 30);
  // Identity component: lambda = -(1/2) b2(0) log|q| = v(q) log(389) / 12.
  CHECK(tate_parameter(k389a, 389).v_q == 1);
  CHECK(lambda_split_mult(k389a, pt(12, 108), 389) == doctest::Approx(std::log(389.0) / 12));
  // 5-torsion of 11a1 sits on components 1..4 of the 5-gon.
  const double lam1 = 0.5 * b2(1.0 / 5) * 5 * std::log(11.0), lam2 = 0.5 * b2(2.0 / 5) * 5 * std::log(11.0);
  const double a = lambda_split_mult(k11a, t11_1, 11), b = lambda_split_mult(k11a, t11_2, 11);
  CHECK((std::fabs(a - lam1) < 1e-12 || std::fabs(a - lam2) < 1e-12));
  CHECK((std::fabs(b - lam1) < 1e-12 || std::fabs(b - lam2) < 1e-12));
  CHECK(std::fabs(a - b) > 0.1);
  // 37a1 is nonsplit at 37 (a_37 = -1); its twist by 5, a non-residue mod 37, is split.
  CHECK_FALSE(tate_parameter(k37a, 37).split);
  CHECK_THROWS_AS(lambda_split_mult(k37a, pt(0, 108), 37), NotSplitMultiplicative);
  CHECK(tate_parameter(CurveQ(-1296 * 25, 11664 * 125), 37).split);
  CHECK(nodal_ap(k37a, 37) == -1);
  CHECK(nodal_ap(CurveQ(-1296 * 25, 11664 * 125), 37) == 1);
  CHECK(nodal_ap(k11a, 11) == 1);
  CHECK_THROWS_AS(tate_parameter(k389a, 7), NotSplitMultiplicative);
}

TEST_CASE("canonical height by the doubling limit") {
  const CurveQ e(0, -2);
  const PointQ p = pt(3, 5);
  const LimitResult h = nt_height_limit(e, p);
  CHECK(h.error_bound < 1e-10);
  // Regression constant, frozen from the first certified run.
  CHECK(h.value == doctest::Approx(0.674788417837).epsilon(1e-11));
  for (long n : {2, 3, 5}) {
    CHECK(std::fabs(nt_height_limit(e, point_mul(e, p, n)).value - n * n * h.value) < 1e-5);
    CHECK(std::fabs(nt_height_limit(k389a, point_mul(k389a, pt(12, 108), n)).value -
                    n * n * nt_height_limit(k389a, pt(12, 108)).value) < 1e-5);
  }
  // Parallelogram law on the rank-two curve 389a1.
  const PointQ a = pt(12, 108), b = pt(48, 108);
  Rng rng = substream(389, 0);
  for (int i = 0; i < 5; ++i) {
    const PointQ x = k389a.add(point_mul(k389a, a, uniform_int(rng, -2, 2)), point_mul(k389a, b, uniform_int(rng, 1, 2)));
    const PointQ y = point_mul(k389a, a, uniform_int(rng, 1, 2));
    const double lhs = nt_height_limit(k389a, k389a.add(x, y)).value + nt_height_limit(k389a, k389a.add(x, k389a.neg(y))).value;
    const double rhs = 2 * nt_height_limit(k389a, x).value + 2 * nt_height_limit(k389a, y).value;
    CHECK(std::fabs(lhs - rhs) < 1e-5);
  }
  // Torsion: 0, and adding it does not change the height.
  CHECK(nt_height_limit(k11a, t11_1).value == 0.0);
  const CurveQ e2(-2, 0);
  const PointQ q = pt(-1, 1), t = pt(0, 0);
  REQUIRE(e2.on_curve(q));
  CHECK(nt_height_limit(e2, q).value > 0.1);
  CHECK(std::fabs(nt_height_limit(e2, e2.add(q, t)).value - nt_height_limit(e2, q).value) < 1e-6);
  CHECK_THROWS_AS(nt_height_limit(e, p, 1e-30), GuardViolation);
}

TEST_CASE("local sum agrees with the limit") {
  const auto corpus = split_multiplicative_corpus(24, 2024);
  REQUIRE(corpus.size() == 24);
  double worst = 0;
  bool nonidentity = false;
  for (const auto& pair : corpus) {
    NTReport r = nt_height_local(pair.curve, pair.point);
    CHECK(r.method == "local-sum");
    double sum = 0, partial = 0;
    for (const auto& term : r.terms) {
      sum += term.lambda;
      partial += partial_height(pair.curve, pair.point, term.place);
      if (term.kind == "good") CHECK(term.lambda >= 0);
      if (term.kind == "split-multiplicative") {
        const TateData td = tate_parameter(pair.curve, term.place);
        if (term.place < 3000) CHECK(nodal_ap(pair.curve, static_cast<long>(term.place)) == 1);
        if (std::fabs(term.lambda - td.v_q * std::log(double(term.place)) / 12) > 1e-9) nonidentity = true;
      }
    }
    CHECK(sum == doctest::Approx(r.total));
    CHECK(partial == doctest::Approx(r.total).epsilon(1e-9));
    const double lim = nt_height_limit(pair.curve, pair.point).value;
    INFO(pair.label);
    CHECK(std::fabs(r.total - lim) < 1e-6);
    worst = std::max(worst, std::fabs(r.total - lim));
  }
  MESSAGE("max |local - limit| = " << worst);
  CHECK(nonidentity);

  SUBCASE("torsion") {
    for (const PointQ& t : {t11_1, t11_2}) CHECK(std::fabs(nt_height_local(k11a, t).total) < 1e-8);
  }
  SUBCASE("unsupported primes") {
    try {
      nt_height_local(CurveQ(0, -2), pt(3, 5));
      FAIL("expected UnsupportedReductionType");
    } catch (const UnsupportedReductionType& ex) {
      CHECK(ex.prime() == 2);
    }
    NTReport r = nt_height_local(CurveQ(0, -2), pt(3, 5), true);
    CHECK(r.method == "residual");
    CHECK(r.terms.back().kind == "residual");
    CHECK(r.total == doctest::Approx(0.674788417837).epsilon(1e-10));
  }
}

TEST_CASE("archimedean height integrates to zero") {
  CHECK(integral_b2() == 0);
  const CurveQ e(0, -2);
  const HaarEstimate s3 = haar_integral_lambda(e, 1000, 7);
  const HaarEstimate s4 = haar_integral_lambda(e, 10000, 7);
  const HaarEstimate s5 = haar_integral_lambda(e, 100000, 7);
  CHECK(std::fabs(s5.mean) < 0.02);
  CHECK(std::fabs(s5.mean) < 3 * s5.stderr_);
  CHECK(s3.stderr_ / s4.stderr_ == doctest::Approx(std::sqrt(10.0)).epsilon(0.3));
  CHECK(s4.stderr_ / s5.stderr_ == doctest::Approx(std::sqrt(10.0)).epsilon(0.3));
  const HaarEstimate again = haar_integral_lambda(e, 10000, 7);
  CHECK(again.mean == s4.mean);
  const HaarEstimate sq = haar_integral_lambda(CurveQ(-1, 0), 100000, 8);
  CHECK(std::fabs(sq.mean) < 3 * sq.stderr_);
}
