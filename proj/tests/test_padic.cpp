#include <doctest.h>

#include <chrono>

#include "bogo/core/rng.hpp"
#include "bogo/padic/formal_group.hpp"
#include "bogo/padic/unramified.hpp"

using namespace bogo;
using namespace bogo::padic;

namespace {

UElem random_elem(const RingPtr& r, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(r->f()));
  for (auto& v : c) v = uniform_below(rng, r->modulus());
  return UElem(r, c);
}

using QSeries = Series<BigRational>;

// Formal logarithm from the invariant differential (z w' - w) / (2 w) dz.
QSeries formal_log(const FormalGroup<BigRational>& fg) {
  const int n = fg.prec();
  const auto& w = fg.w().c;
  QSeries u = QSeries::zero(BigRational(0), n), v = QSeries::zero(BigRational(0), n);
  for (int i = 3; i < n; ++i) {
    u.c[static_cast<std::size_t>(i - 3)] = BigRational(i - 1) * w[static_cast<std::size_t>(i)];
    v.c[static_cast<std::size_t>(i - 3)] = 2 * w[static_cast<std::size_t>(i)];
  }
  // 1 / v with v(0) = 2.
  QSeries inv = QSeries::zero(BigRational(0), n);
  inv.c[0] = BigRational(1, 2);
  for (int i = 1; i < n; ++i) {
    BigRational s = 0;
    for (int j = 1; j <= i; ++j) s += v.c[static_cast<std::size_t>(j)] * inv.c[static_cast<std::size_t>(i - j)];
    inv.c[static_cast<std::size_t>(i)] = -s / 2;
  }
  QSeries omega = u * inv;
  QSeries log = QSeries::zero(BigRational(0), n);
  for (int i = 0; i + 1 < n; ++i) log.c[static_cast<std::size_t>(i + 1)] = omega.c[static_cast<std::size_t>(i)] / (i + 1);
  return log;
}

// w is known below degree n, so the logarithm is exact below degree n - 3.
bool agree_low(const QSeries& x, const QSeries& y) {
  for (int i = 0; i + 3 < x.prec(); ++i)
    if (x.c[static_cast<std::size_t>(i)] != y.c[static_cast<std::size_t>(i)]) return false;
  return true;
}

QSeries compose(const QSeries& f, const QSeries& g) {
  QSeries r = QSeries::zero(BigRational(0), f.prec()), pw = QSeries::monomial(BigRational(1), 0, f.prec());
  for (int i = 0; i < f.prec(); ++i) {
    r = r + pw.scaled(f.c[static_cast<std::size_t>(i)]);
    pw = pw * g;
  }
  return r;
}

}  // namespace

TEST_CASE("unramified rings") {
  CHECK(UnramifiedRing::make(5, 2)->defining_poly() == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(UnramifiedRing::make(5, 4)->defining_poly() == std::vector<std::uint64_t>{2, 0, 0, 0, 1});
  CHECK(UnramifiedRing::make(7, 2)->defining_poly() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(UnramifiedRing::make(7, 4)->defining_poly() == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
  CHECK_THROWS_AS(UnramifiedRing::make(5, 2, 40), GuardViolation);
  auto r = UnramifiedRing::make(5, 2, 20);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    UElem x = random_elem(r, rng);
    if (!x.is_unit()) continue;
    CHECK(x * x.inverse() == UElem::from_int(r, 1));
  }
}

TEST_CASE("valuation") {
  auto r = UnramifiedRing::make(5, 2, 20);
  CHECK(valuation(UElem::from_int(r, 1)) == 0);
  CHECK(valuation(UElem::from_int(r, 125) * (UElem::generator(r) + UElem::from_int(r, 1))) == 3);
  CHECK_THROWS_AS(valuation(UElem::from_int(r, 0)), BelowPrecision);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    UElem x = random_elem(r, rng).shifted(static_cast<int>(uniform_below(rng, 6)));
    UElem y = random_elem(r, rng).shifted(static_cast<int>(uniform_below(rng, 6)));
    if (x.is_zero() || y.is_zero()) continue;
    const int vx = valuation(x), vy = valuation(y);
    if (vx + vy < 20) CHECK(valuation(x * y) == vx + vy);
  }
}

TEST_CASE("Frobenius") {
  for (auto [p, f] : {std::pair{5, 2}, std::pair{5, 4}, std::pair{7, 2}}) {
    auto r = UnramifiedRing::make(static_cast<std::uint64_t>(p), f, 20);
    Rng rng(static_cast<std::uint64_t>(p * 10 + f));
    CHECK(frobenius(UElem::from_int(r, 123456)) == UElem::from_int(r, 123456));
    for (int i = 0; i < 1000; ++i) {
      UElem x = random_elem(r, rng), y = random_elem(r, rng);
      CHECK(frobenius(x, f) == x);
      CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
      CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
      CHECK(frobenius(x).residue() == x.pow(static_cast<std::uint64_t>(p)).residue());
      if (!x.is_zero()) CHECK(valuation(frobenius(x)) == valuation(x));
      if (i < 50 && x.is_unit()) {
        UElem w = teichmuller(x);
        CHECK(w.residue() == x.residue());
        std::uint64_t q = 1;
        for (int j = 0; j < f; ++j) q *= static_cast<std::uint64_t>(p);
        CHECK(w.pow(q) == w);
        CHECK(frobenius(w) == w.pow(static_cast<std::uint64_t>(p)));
      }
    }
  }
}

TEST_CASE("metric estimate") {
  auto r2 = UnramifiedRing::make(5, 2, 20);
  // Teichmuller representatives are fixed by phi_q = phi^2 in Q_{25}.
  UElem w = teichmuller(UElem::generator(r2) + UElem::from_int(r2, 3));
  auto t = check_metric2(PadicNumber{0, w});
  CHECK(t.passed);
  CHECK_FALSE(t.lhs_exact);
  CHECK(t.lhs_valuation >= 1);
  // a = p: |p - p^25| = 1/p, the equality case.
  auto eq = check_metric2(PadicNumber{1, UElem::from_int(r2, 1)});
  CHECK(eq.passed);
  CHECK(eq.lhs_exact);
  CHECK(eq.lhs_valuation == 1);
  CHECK(eq.rhs_valuation == 1);
  auto inv = check_metric2(PadicNumber{-1, UElem::from_int(r2, 2)});
  CHECK(inv.passed);
  CHECK(inv.inverse_branch_used);
  CHECK(inv.inverse_branch_ok);
  CHECK(inv.lhs_valuation == -25);

  auto start = std::chrono::steady_clock::now();
  for (auto [p, f] : {std::pair{5, 2}, std::pair{5, 4}, std::pair{7, 2}}) {
    auto r = UnramifiedRing::make(static_cast<std::uint64_t>(p), f, 20);
    int failures = 0, nonintegral = 0, vacuous = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      auto a = sample_padic(r, -3, 3, 2024, i);
      auto res = check_metric2(a);
      if (!res.passed) ++failures;
      if (a.e < 0) ++nonintegral;
      if (res.vacuous) ++vacuous;
    }
    CHECK(failures == 0);
    CHECK(nonintegral > 3000);
    CHECK(vacuous == 0);
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 30.0);
}

TEST_CASE("cyclotomic valuation") {
  CHECK(cyclotomic_valuation(5) == std::pair<long, long>{1, 4});
  CHECK(cyclotomic_valuation(7) == std::pair<long, long>{1, 6});
  CHECK(cyclotomic_valuation(2) == std::pair<long, long>{1, 1});
}

TEST_CASE("formal group law") {
  CurveQ e(5, 1);
  auto fg = formal_group(e, 27);
  QSeries tt = fg.T();
  CHECK(fg.multiply(1) == tt);
  CHECK(fg.multiply(2).c[1] == 2);
  CHECK(fg.multiply(5).c[1] == 5);
  CHECK(fg.multiply(0) == QSeries::zero(BigRational(0), 27));
  CHECK(fg.add(tt, QSeries::zero(BigRational(0), 27)) == tt);
  CHECK(fg.add(tt, fg.inverse(tt)) == QSeries::zero(BigRational(0), 27));
  CHECK(fg.multiply(5) == fg.multiply_iterated(5));
  CHECK(fg.multiply(5) == fg.add(fg.multiply(4), fg.multiply(1)));
  CHECK(fg.multiply(5) == fg.add(fg.multiply(2), fg.multiply(3)));
  CHECK(fg.multiply(-3) == fg.inverse(fg.multiply(3)));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(fg.add(fg.multiply(m), fg.multiply(n)) == fg.multiply(m + n));

  auto law = fg.law(10);
  for (std::size_t i = 0; i < law.c.size(); ++i)
    for (std::size_t j = 0; j < law.c[i].size(); ++j) CHECK(law.c[i][j] == law.c[j][i]);
  CHECK(law.c[1][0] == 1);
  CHECK(law.c[0][1] == 1);
  for (std::size_t i = 2; i < law.c.size(); ++i) CHECK(law.c[i][0] == 0);
  auto lhs = fg.add(fg.add(BiSeries<BigRational>::monomial(1, 1, 0, 8), BiSeries<BigRational>::monomial(1, 0, 1, 8)),
                    BiSeries<BigRational>::monomial(1, 1, 0, 8));
  auto rhs = fg.add(BiSeries<BigRational>::monomial(1, 1, 0, 8),
                    fg.add(BiSeries<BigRational>::monomial(1, 0, 1, 8), BiSeries<BigRational>::monomial(1, 1, 0, 8)));
  CHECK(lhs == rhs);

  // The formal logarithm turns F into addition.
  auto small = formal_group(CurveQ(-2, 3), 20);
  QSeries lg = formal_log(small);
  for (long m : {2L, 3L, 5L}) CHECK(agree_low(compose(lg, small.multiply(m)), lg.scaled(BigRational(m))));
  CHECK(agree_low(compose(lg, small.add(small.multiply(2), small.T())), lg.scaled(BigRational(3))));
  CHECK_FALSE(agree_low(compose(lg, small.multiply(2)), lg.scaled(BigRational(3))));
  CHECK_THROWS_AS(formal_group(e, 65), GuardViolation);
  CHECK_THROWS_AS(formal_group(CurveQ(BigRational(1, 2), 1), 10), DomainError);
}

TEST_CASE("Lubin-Tate sign") {
  auto start = std::chrono::steady_clock::now();
  auto r = lubin_tate_signature(CurveQ(5, 1), 5, 26);
  CHECK(r.low_vanish);
  CHECK(r.sign == -1);
  CHECK(r.first_nonzero == 25);
  CHECK(trace_q(count_points(reduce_mod(CurveQ(5, 1), 5)).a_p, 5) == -10);

  auto ring = UnramifiedRing::make(5, 2, 20);
  auto [a, b] = twist_by_sqrt(CurveQ(5, 1), 2, ring);
  CHECK(a == UElem::from_int(ring, 10));
  CHECK(b * b == UElem::from_int(ring, 8));
  auto tw = lubin_tate_signature(a, b, 26);
  CHECK(tw.low_vanish);
  CHECK(tw.sign == 1);
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 10.0);

  // Untwisted models over Q that are supersingular at p all give -1.
  int seen = 0;
  for (int p : {5, 7}) {
    for (int aa = -3; aa <= 3; ++aa)
      for (int bb = -3; bb <= 3; ++bb) {
        if (4 * aa * aa * aa + 27 * bb * bb == 0) continue;
        CurveQ c(aa, bb);
        try {
          if (count_points(reduce_mod(c, static_cast<std::uint64_t>(p))).a_p != 0) continue;
        } catch (const BadReduction&) {
          continue;
        }
        auto s = lubin_tate_signature(c, static_cast<std::uint64_t>(p), p * p + 1);
        CHECK(s.low_vanish);
        CHECK(s.sign == -1);
        ++seen;
      }
  }
  CHECK(seen >= 6);
  // y^2 = x^3 - x is supersingular at 7 (7 = 3 mod 4) but ordinary at 5.
  CHECK(lubin_tate_signature(CurveQ(-1, 0), 7, 50).sign == -1);
  CHECK_THROWS_AS(lubin_tate_signature(CurveQ(-1, 0), 5, 26), NotSupersingular);
  CHECK_THROWS_AS(lubin_tate_signature(CurveQ(5, 1), 5, 20), DomainError);
}
