#include <doctest.h>

#include <chrono>

#include "bogo/gl2/gl2.hpp"

using namespace bogo;
using namespace bogo::gl2;

namespace {

// Scalars together with every matrix whose characteristic polynomial is
// irreducible over F_p: the union of all non-split Cartan subgroups.
std::uint64_t irreducible_or_scalar(std::uint32_t p) {
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          Mat m{p, a, b, c, d};
          if (!m.invertible()) continue;
          if (b == 0 && c == 0 && a == d) {
            ++count;
            continue;
          }
          const std::uint32_t tr = (a + d) % p, det = m.det();
          bool has_root = false;
          for (std::uint32_t x = 0; x < p && !has_root; ++x) has_root = (x * x + (p - tr) * x + det) % p == 0;
          if (!has_root) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("matrices mod N") {
  Mat m = Mat::make(25, 3, -1, 7, 12);
  CHECK(m.b == 24);
  CHECK(m * m.inverse() == Mat::identity(25));
  CHECK(Mat::from_code(25, m.code()) == m);
  CHECK_FALSE(Mat::make(25, 5, 0, 0, 1).invertible());
  CHECK(gl2_order(5) == 480);
  CHECK(gl2_order(7) == 2016);
  CHECK(gl2_order(25) == 300000);
  CHECK(gl2_order(50) == 1800000);
  CHECK(Subgroup::full(5).order() == 480);
  CHECK(Subgroup::full(10).order() == gl2_order(10));
}

TEST_CASE("non-split Cartan") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto start = std::chrono::steady_clock::now();
    Cartan g = nonsplit_cartan(p);
    const std::uint64_t q1 = static_cast<std::uint64_t>(p) * p - 1;
    CHECK(g.group.order() == q1);
    for (std::uint32_t s = 1; s < p; ++s) CHECK(g.group.contains(Mat::make(p, s, 0, 0, s)));
    for (const auto& x : g.group.elements())
      for (const auto& y : g.group.elements()) REQUIRE(g.group.contains(x * y));
    CHECK(normalizer_order(g) == 2 * q1);
    if (p <= 7) {
      auto c = conjugate_closure(g);
      const std::uint64_t p3 = static_cast<std::uint64_t>(p) * p * p;
      CHECK(c.size > p3);
      CHECK(c.size >= static_cast<std::uint64_t>(p - 1) * (p - 1) * p * p / 2);
      CHECK(c.size == irreducible_or_scalar(p));
      CHECK(c.conjugates == gl2_order(p) / (2 * q1));
      CHECK(c.generates);
      CHECK(c.generated_order == gl2_order(p));
      CHECK(c.min_intersection == p - 1);
      CHECK(c.max_intersection == p - 1);
      MESSAGE("p = " << p << ": closure " << c.size << ", conjugates " << c.conjugates);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (p <= 7) CHECK(secs < 5.0);
  }
  CHECK(nonsplit_cartan(5).group.order() == 24);
  CHECK(nonsplit_cartan(5).eps == 2);
  CHECK_THROWS_AS(nonsplit_cartan(17), GuardViolation);
  CHECK_THROWS_AS(nonsplit_cartan(3), DomainError);
}

TEST_CASE("matrix logarithm") {
  CHECK(matrix_log(5, 2, Mat::identity(25)) == Mat{5, 0, 0, 0, 0});
  CHECK(matrix_log(5, 2, Mat::make(25, 6, 10, 15, 21)) == Mat{5, 1, 2, 3, 4});
  CHECK(matrix_log(5, 3, Mat::make(125, 26, 50, 75, 101)) == Mat{5, 1, 2, 3, 4});
  CHECK_THROWS_AS(matrix_log(5, 2, Mat::make(25, 2, 0, 0, 1)), DomainError);
  auto add = log_additivity_exhaustive(5, 2);
  CHECK(add.checked == 625ULL * 625ULL);
  CHECK(add.failures == 0);
  CHECK(log_additivity_exhaustive(5, 3).failures == 0);
  auto eq = log_equivariance_check(5, 2, 10000, 11);
  CHECK(eq.checked == 10000);
  CHECK(eq.failures == 0);
  CHECK(log_equivariance_check(7, 2, 2000, 12).failures == 0);
  // Scalars are central.
  Mat psi = kernel_element(5, 2, Mat{5, 1, 4, 2, 0});
  Mat s = Mat::make(25, 7, 0, 0, 7);
  CHECK(matrix_log(5, 2, s * psi * s.inverse()) == matrix_log(5, 2, psi));
}

TEST_CASE("centralizer orbit bound") {
  auto g25 = Subgroup::full(25);
  auto id = centralizer_orbit_check(g25, 5, Mat::identity(25));
  CHECK(id.passed);
  CHECK(id.centralizer_order == 300000);
  CHECK(id.kernel_order == 625);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto r = centralizer_orbit_check(g25, 5, random_kernel_element(25, 5, seed));
    CHECK(r.passed);
    CHECK(r.kernel_order <= r.p4);
  }
  auto g50 = Subgroup::full(50);
  CHECK(g50.order() == 1800000);
  auto r = centralizer_orbit_check(g50, 5, random_kernel_element(50, 5, 4));
  CHECK(r.passed);
  CHECK(r.kernel_order == 625);
  CHECK_THROWS_AS(centralizer_orbit_check(g25, 5, Mat::make(25, 2, 0, 0, 1)), DomainError);
}
