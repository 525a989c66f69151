#include <cmath>
#include <complex>

#include "bogo/core/errors.hpp"
#include "bogo/core/rng.hpp"
#include "bogo/core/zfactor.hpp"
#include "bogo/heights/heights.hpp"
#include "doctest.h"

using namespace bogo;

namespace {

// Jensen: log M(f) = integral of log|f(e^{2 pi i t})| dt, by the trapezoid rule.
double mahler_oracle(const Polynomial& f, int points = 1 << 14) {
  double s = 0;
  for (int i = 0; i < points; ++i) {
    std::complex<double> z = std::polar(1.0, 2 * M_PI * i / points);
    s += std::log(std::abs(f.eval(z)));
  }
  return s / points;
}

// Random irreducible, non-cyclotomic polynomial of degree <= 6 whose roots stay
// away from the unit circle (so the trapezoid oracle converges fast).
Polynomial random_irreducible(Rng& rng) {
  while (true) {
    int deg = 1 + static_cast<int>(uniform_below(rng, 6));
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = uniform_int(rng, -6, 6);
    c.back() = uniform_int(rng, 1, 4);
    if (c[0] == 0) continue;
    Polynomial f(c);
    if (!is_irreducible_over_q(f)) continue;
    auto a = AlgebraicNumber::from_min_poly(f);
    bool near = false;
    for (auto& r : a.conjugates())
      if (std::fabs(std::abs(r.center) - 1) < 0.05) near = true;
    if (near) continue;
    return f.primitive();
  }
}

}  // namespace

TEST_CASE("Weil height examples") {
  auto h = weil_height(AlgebraicNumber::from_min_poly(Polynomial::parse("x^3 - 2")));
  CHECK(std::fabs(h.total - std::log(2.0) / 3) < 1e-12);
  CHECK(h.error_bound <= 1e-10);
  CHECK(h.real_places == 1);
  CHECK(h.complex_places == 1);
  CHECK(weil_height(AlgebraicNumber::from_min_poly(Polynomial::parse("x^4+x^3+x^2+x+1"))).total < 1e-15);
  double golden = 0.5 * std::log((1 + std::sqrt(5.0)) / 2);
  CHECK(std::fabs(weil_height(AlgebraicNumber::from_min_poly(Polynomial::parse("x^2 - x - 1"))).total - golden) < 1e-12);
  CHECK(golden == doctest::Approx(0.2406059).epsilon(1e-7));
}

TEST_CASE("Weil height profile invariants") {
  auto a = AlgebraicNumber::from_min_poly(Polynomial::parse("3x^3 - x + 7"));
  auto h = weil_height(a);
  double sum = 0;
  for (double t : h.archimedean) sum += t;
  CHECK(std::fabs(h.total - (h.finite_aggregate + sum / 3)) < 1e-15);
  CHECK(h.finite_aggregate == doctest::Approx(std::log(3.0) / 3));
  auto q = weil_height(AlgebraicNumber::rational(BigRational(-45, 28)));
  CHECK(q.total == doctest::Approx(std::log(45.0)));
  REQUIRE(q.finite_places.size() == 2);
  CHECK(q.finite_places[0].first == 2);
  CHECK(q.finite_places[0].second == doctest::Approx(2 * std::log(2.0)));
  CHECK(q.finite_places[1].first == 7);
}

TEST_CASE("Weil height rejects bad minimal polynomials") {
  CHECK_THROWS_AS(AlgebraicNumber::from_min_poly(Polynomial::parse("x^4 + 4")), DomainError);
  CHECK_THROWS_AS(AlgebraicNumber::from_min_poly(Polynomial::parse("x^2 - 2x + 1")), DomainError);
  // Scaling is normalized away: the stored polynomial is primitive.
  auto a = AlgebraicNumber::from_min_poly(Polynomial::parse("4x^2 - 8"));
  CHECK(a.min_poly() == Polynomial::parse("x^2 - 2"));
}

TEST_CASE("roots of unity") {
  CHECK(is_root_of_unity(AlgebraicNumber::rational(1)) == 1);
  CHECK(is_root_of_unity(AlgebraicNumber::rational(-1)) == 2);
  CHECK(is_root_of_unity(AlgebraicNumber::from_min_poly(Polynomial::parse("x^2+x+1"))) == 3);
  CHECK_FALSE(is_root_of_unity(AlgebraicNumber::from_min_poly(Polynomial::parse("x^2-2"))).has_value());
  // Salem-type unit, not a root of unity.
  CHECK_FALSE(is_root_of_unity(AlgebraicNumber::from_min_poly(Polynomial::parse("x^4 - x^3 - x^2 - x + 1"))).has_value());
  for (int n = 1; n <= 30; ++n) {
    auto z = root_of_unity(n);
    CHECK(is_root_of_unity(z) == n);
    CHECK(weil_height(z).total <= 1e-12);
  }
}

TEST_CASE("Weil height agrees with the Jensen-integral oracle") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_irreducible(rng);
    auto h = weil_height(AlgebraicNumber::from_min_poly(f));
    CHECK(h.total == doctest::Approx(mahler_oracle(f) / f.degree()).epsilon(1e-8));
  }
}

TEST_CASE("height identity suite examples") {
  auto s2 = AlgebraicNumber::from_min_poly(Polynomial::parse("x^2 - 2"), {1.4, 0});
  auto rep = height_identity_suite(s2, s2, 2);
  for (auto& c : rep) CHECK_MESSAGE(c.passed, c.name);
  CHECK(rep[0].name == "submultiplicativity");
  CHECK(rep[0].lhs == doctest::Approx(std::log(2.0)));
  CHECK(std::fabs(rep[0].slack) < 1e-12);
  CHECK(weil_height(algebraic_product(s2, s2)).degree == 1);

  auto two = AlgebraicNumber::rational(2);
  auto half = algebraic_power(two, -1);
  CHECK(half.min_poly() == Polynomial::parse("2x - 1"));
  CHECK(weil_height(half).total == doctest::Approx(std::log(2.0)));
  for (auto& c : height_identity_suite(two, two, -1)) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("height identities on seeded algebraic numbers") {
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    auto a = AlgebraicNumber::from_min_poly(random_irreducible(rng));
    double h = weil_height(a).total;
    CHECK(h > 0);
    CHECK(!is_root_of_unity(a).has_value());
    CHECK(weil_height(algebraic_inverse(a)).total == doctest::Approx(h).epsilon(1e-12));
    int k = static_cast<int>(uniform_int(rng, -5, 5));
    if (k == 0) continue;
    CHECK(weil_height(algebraic_power(a, k)).total == doctest::Approx(std::abs(k) * h).epsilon(1e-10));
  }
}

TEST_CASE("root-of-unity invariance and random degree-4 pairs") {
  Rng rng(4);
  int done = 0;
  while (done < 6) {
    Polynomial f = random_irreducible(rng), g = random_irreducible(rng);
    if (f.degree() != 4 || g.degree() > 4) continue;
    auto a = AlgebraicNumber::from_min_poly(f), b = AlgebraicNumber::from_min_poly(g);
    for (auto& c : height_identity_suite(a, b, 3, 3 + done)) CHECK_MESSAGE(c.passed, c.name);
    ++done;
  }
  auto a = AlgebraicNumber::from_min_poly(Polynomial::parse("x^3 - x - 3"));
  for (int n = 1; n <= 12; ++n) {
    auto z = root_of_unity(n);
    CHECK(weil_height(algebraic_product(z, a)).total == doctest::Approx(weil_height(a).total).epsilon(1e-10));
  }
}
