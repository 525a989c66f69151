#include <doctest.h>

#include <cmath>

#include "bogo/core/integer.hpp"
#include "bogo/primes/primes.hpp"

using namespace bogo;

namespace {

// a_p by direct enumeration of y^2 over F_p.
long long naive_ap(long long a, long long b, long long p) {
  std::vector<int> sq(static_cast<std::size_t>(p), 0);
  for (long long y = 0; y < p; ++y) ++sq[static_cast<std::size_t>(y * y % p)];
  long long n = 1;
  for (long long x = 0; x < p; ++x) {
    long long r = ((x * x % p * x + a * x + b) % p + p) % p;
    n += sq[static_cast<std::size_t>(r)];
  }
  return p + 1 - n;
}

}  // namespace

TEST_CASE("P1") {
  CurveQ e(5, 1);
  auto r5 = check_P1(e, 5);
  CHECK_FALSE(r5.holds);
  CHECK(r5.reason.find("j~ = 0") != std::string::npos);
  auto r131 = check_P1(e, 131);
  CHECK(r131.holds);
  // 4a^3 + 27b^2 = 527 = 17 * 31.
  CHECK_FALSE(check_P1(e, 17).holds);
  CHECK(check_P1(e, 17).reason.find("bad reduction") != std::string::npos);
  for (std::uint64_t p : primes_up_to(400)) {
    if (p < 5) continue;
    if (check_P1(CurveQ(0, 1), p).holds) FAIL("j = 0 curve satisfied P1 at " << p);
    if (p == 17 || p == 31) continue;
    bool expect = naive_ap(5, 1, static_cast<long long>(p)) == 0 && p != 5;
    CHECK(check_P1(e, p).holds == expect);
    if (check_P1(e, p).holds) CHECK(trace_q(0, p) == -2 * static_cast<long long>(p));
  }
  CHECK_THROWS_AS(check_P1(e, 3), DomainError);
}

TEST_CASE("P2") {
  auto cm = check_P2(CurveQ(-1, 0), 5, 10000);
  CHECK(cm.status == P2Status::Inconclusive);
  // Frobenius of a CM curve at p = 1 mod 4 lies in a split Cartan normalizer.
  CHECK(std::find(cm.unresolved.begin(), cm.unresolved.end(), SubgroupClass::SplitCartanNormalizer) !=
        cm.unresolved.end());

  // Short model of a conductor-11 curve with a rational 5-torsion point.
  auto borel = check_P2(CurveQ(-13392, -1080432), 5, 10000);
  CHECK(borel.status == P2Status::Inconclusive);
  CHECK(std::find(borel.unresolved.begin(), borel.unresolved.end(), SubgroupClass::Borel) != borel.unresolved.end());
  for (std::uint64_t ell : primes_up_to(2000)) {
    if (ell < 5 || ell == 11) continue;
    long long a = ((naive_ap(-13392, -1080432, static_cast<long long>(ell)) % 5) + 5) % 5;
    long long d = ((a * a - 4 * static_cast<long long>(ell)) % 5 + 5) % 5;
    CHECK((d == 0 || d == 1 || d == 4));
  }

  auto ok = check_P2(CurveQ(5, 1), 131);
  CHECK(ok.status == P2Status::Verified);
  CHECK(ok.evidence.size() == 4);
  for (const auto& w : ok.evidence) {
    CHECK(w.a_mod_p == static_cast<std::uint64_t>(((naive_ap(5, 1, static_cast<long long>(w.ell)) % 131) + 131) % 131));
  }
}

TEST_CASE("admissible prime scan") {
  CurveQ e(5, 1);
  auto c = find_admissible_prime(e, 1000);
  CHECK(c.p == 131);
  CHECK(c.q == 17161);
  CHECK(c.a_p == 0);
  CHECK(c.a_q == c.a_p * c.a_p - 2 * 131);
  CHECK(c.j_tilde == 62);
  CHECK(c.p2 == P2Status::Verified);
  for (std::uint64_t bound : {131ULL, 200ULL, 5000ULL}) CHECK(find_admissible_prime(e, bound).p == 131);
  CHECK_THROWS_AS(find_admissible_prime(e, 130), NotFoundBelowBound);
  CHECK_THROWS_AS(find_admissible_prime(CurveQ(-1, 0), 200), NotFoundBelowBound);
  CHECK_THROWS_AS(find_admissible_prime(e, 3), NotFoundBelowBound);
}

TEST_CASE("gap constants") {
  auto g = gap_constants(5);
  CHECK(g.unramified == doctest::Approx(std::log(2.5) / 26).epsilon(1e-15));
  CHECK(g.unramified == doctest::Approx(0.035242).epsilon(1e-5));
  CHECK(std::abs(g.unramified - 0.0352439) < 5e-6);
  CHECK(g.ramified == doctest::Approx(std::log(5.0) / 781250).epsilon(1e-15));
  CHECK(g.Q(1) == 600);
  CHECK(g.Q(2) == 25);
  CHECK(g.Q(7) == 25);
  double prev = g.unramified;
  for (std::uint64_t p : {7, 11, 13}) {
    auto h = gap_constants(p);
    CHECK(h.unramified < prev);
    CHECK(h.ramified > 0);
    prev = h.unramified;
  }
  CHECK_THROWS_AS(gap_constants(3), DomainError);
}

TEST_CASE("empirical gap scan") {
  CurveQ e(5, 1);
  auto cert = find_admissible_prime(e, 1000);
  auto q = empirical_gap_scan(e, cert, 1, 200, 7);
  CHECK(q.violations.empty());
  CHECK(q.min_height == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  auto r2 = empirical_gap_scan(e, cert, 2, 200, 7);
  CHECK(r2.field_degree == 6);
  CHECK(r2.sampled == 200);
  CHECK(r2.violations.empty());
  CHECK(r2.min_height >= r2.bound);
  auto r3 = empirical_gap_scan(e, cert, 3, 200, 7);
  CHECK(r3.field_degree == 48);
  CHECK(r3.violations.empty());
  MESSAGE("min heights: " << q.min_height << " " << r2.min_height << " " << r3.min_height << ", roots of unity skipped "
                          << r3.roots_of_unity_skipped);
  PrimeCertificate fake = cert;
  fake.p = 5;
  CHECK_THROWS_AS(empirical_gap_scan(e, fake, 5, 10, 1), DomainError);
}
