#include "bogo/primes/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "bogo/core/integer.hpp"
#include "bogo/core/modp.hpp"
#include "bogo/heights/heights.hpp"

namespace bogo {

std::string to_string(P2Status s) { return s == P2Status::Verified ? "Verified" : "Inconclusive"; }

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Borel:
      return "borel";
    case SubgroupClass::SplitCartanNormalizer:
      return "split-cartan-normalizer";
    case SubgroupClass::NonsplitCartanNormalizer:
      return "nonsplit-cartan-normalizer";
    case SubgroupClass::Exceptional:
      return "exceptional";
  }
  return "?";
}

P1Result check_P1(const CurveQ& e, std::uint64_t p) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("check_P1 requires a prime p >= 5");
  CurveFp r;
  try {
    r = reduce_mod(e, p);
  } catch (const DomainError& err) {
    return {false, err.what()};
  }
  auto cnt = count_points(r);
  if (cnt.a_p != 0) return {false, "ordinary reduction (a_p = " + std::to_string(cnt.a_p) + ")"};
  if (r.j.is_zero()) return {false, "supersingular but j~ = 0"};
  if (r.j == FqElement::from_int(p, 1, 1728)) return {false, "supersingular but j~ = 1728"};
  return {true, "good supersingular reduction, j~ = " + std::to_string(r.j.c0())};
}

namespace {

/// Classes excluded by one Frobenius element with char poly x^2 - a x + l mod p.
/// Elements of a normalizer outside its Cartan have trace 0; elements of a
/// split (nonsplit) Cartan have split (irreducible or scalar) char polys; the
/// exceptional groups only have projective orders 1..5, read off from a^2/l.
std::array<bool, 4> excluded(std::uint64_t a, std::uint64_t ell, std::uint64_t p) {
  using namespace modp;
  std::array<bool, 4> out{};
  const u64 l = ell % p;
  const u64 disc = sub(mul(a, a, p), mul(4, l, p), p);
  const int chi = legendre(disc, p);
  out[0] = chi == -1;
  out[1] = a != 0 && chi == -1;
  out[2] = a != 0 && chi == 1;
  const u64 u = mul(mul(a, a, p), inv(l, p), p);
  const bool small_order = u == 0 || u == 1 || u == 2 || u == 4 || add(sub(mul(u, u, p), mul(3, u, p), p), 1, p) == 0;
  out[3] = !small_order;
  return out;
}

}  // namespace

P2Result check_P2(const CurveQ& e, std::uint64_t p, std::uint64_t ell_max) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("check_P2 requires a prime p >= 5");
  P2Result res;
  std::array<bool, 4> found{};
  for (std::uint64_t ell : primes_up_to(ell_max)) {
    if (ell < 5 || ell == p) continue;
    CurveFp r;
    try {
      r = reduce_mod(e, ell);
    } catch (const DomainError&) {
      continue;
    }
    ++res.primes_sampled;
    const long long a = count_points(r).a_p;
    const std::uint64_t a_mod = static_cast<std::uint64_t>(((a % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                                           static_cast<long long>(p));
    auto ex = excluded(a_mod, ell, p);
    for (int c = 0; c < 4; ++c) {
      if (found[c] || !ex[c]) continue;
      found[c] = true;
      res.evidence.push_back({ell, a_mod, static_cast<SubgroupClass>(c)});
    }
    if (found[0] && found[1] && found[2] && found[3]) break;
  }
  std::sort(res.evidence.begin(), res.evidence.end(),
            [](const auto& x, const auto& y) { return x.rules_out < y.rules_out; });
  for (int c = 0; c < 4; ++c)
    if (!found[c]) res.unresolved.push_back(static_cast<SubgroupClass>(c));
  res.status = res.unresolved.empty() ? P2Status::Verified : P2Status::Inconclusive;
  return res;
}

PrimeCertificate find_admissible_prime(const CurveQ& e, std::uint64_t p_max, std::uint64_t ell_max) {
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p < 5) continue;
    if (!check_P1(e, p).holds) continue;
    auto p2 = check_P2(e, p, ell_max);
    if (p2.status != P2Status::Verified) continue;
    PrimeCertificate c;
    c.p = p;
    c.q = p * p;
    c.a_p = 0;
    c.a_q = trace_q(0, p);
    c.j_tilde = reduce_mod(e, p).j.c0();
    c.p1 = true;
    c.p2 = p2.status;
    c.evidence = p2.evidence;
    return c;
  }
  throw NotFoundBelowBound(p_max);
}

GapConstants gap_constants(std::uint64_t p) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("gap_constants requires a prime p >= 5");
  GapConstants g;
  g.p = p;
  const double pd = static_cast<double>(p);
  g.unramified = std::log(pd / 2.0) / (pd * pd + 1.0);
  g.ramified = std::log(pd) / (2.0 * std::pow(pd, 8));
  g.q_of_n = p * p;
  g.q_of_1 = (p * p - 1) * p * p;
  return g;
}

GapScanReport empirical_gap_scan(const CurveQ& e, const PrimeCertificate& cert, int n, std::size_t count,
                                 std::uint64_t seed) {
  if (n < 1) throw DomainError("N must be positive");
  if (std::gcd(static_cast<std::uint64_t>(n), cert.p) != 1) throw DomainError("gap scan requires gcd(N, p) = 1");
  GapScanReport rep;
  rep.n = n;
  rep.p = cert.p;
  rep.bound = gap_constants(cert.p).unramified;
  rep.min_height = std::numeric_limits<double>::infinity();
  std::vector<NFElement> elems;
  if (n == 1) {
    elems = sample_field_elements(NumberField::rationals(), count, seed);
  } else {
    auto k = torsion_field(e, n);
    elems = sample_field_elements(k, count, seed);
  }
  if (!elems.empty()) rep.field_degree = static_cast<int>(elems.front().field()->degree());
  for (const auto& x : elems) {
    ++rep.sampled;
    Polynomial m = nf_min_poly(x);
    auto alpha = AlgebraicNumber::trusted(m);
    if (is_root_of_unity(alpha)) {
      ++rep.roots_of_unity_skipped;
      continue;
    }
    auto h = weil_height(alpha);
    rep.min_height = std::min(rep.min_height, h.total);
    if (h.total < rep.bound) rep.violations.push_back({"root of " + m.to_string(), h.total});
  }
  return rep;
}

}  // namespace bogo
