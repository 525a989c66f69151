#include <chrono>
#include <cmath>
#include <sstream>

#include "bogo/cli/cli.hpp"
#include "bogo/core/zfactor.hpp"
#include "bogo/elliptic/elliptic.hpp"
#include "bogo/equidist/equidist.hpp"
#include "bogo/gl2/gl2.hpp"
#include "bogo/heights/heights.hpp"
#include "bogo/nt/corpus.hpp"
#include "bogo/nt/neron_tate.hpp"
#include "bogo/padic/formal_group.hpp"
#include "bogo/padic/unramified.hpp"
#include "bogo/primes/primes.hpp"

namespace bogo::cli {

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

using Criterion = void (*)(std::uint64_t seed, Verdict& v);

const CurveQ& supersingular_example() {
  static const CurveQ e(5, 1);
  return e;
}

void weil_height_law(std::uint64_t, Verdict& v) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    Polynomial f = Polynomial::parse("x^" + std::to_string(n) + "-2");
    const double err = std::fabs(weil_height(AlgebraicNumber::from_min_poly(f)).total - std::log(2.0) / n);
    worst = std::max(worst, err);
    v.require(err <= 1e-10, "n = " + std::to_string(n) + " off by " + std::to_string(err));
  }
  if (v.passed) v.detail << "max error " << worst << " over n = 1..20";
}

void kronecker(std::uint64_t seed, Verdict& v) {
  for (int k = 1; k <= 30; ++k) {
    const double h = weil_height(root_of_unity(k)).total;
    v.require(std::fabs(h) <= 1e-12, "root of unity of order " + std::to_string(k) + " has h = " + std::to_string(h));
  }
  Rng rng = substream(seed, 2);
  int found = 0;
  double smallest = INFINITY;
  while (found < 100) {
    const int deg = 1 + static_cast<int>(uniform_below(rng, 6));
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = uniform_int(rng, -6, 6);
    c.back() = uniform_int(rng, 1, 4);
    if (c[0] == 0) continue;
    const Polynomial f(c);
    if (!is_irreducible_over_q(f)) continue;
    const AlgebraicNumber a = AlgebraicNumber::from_min_poly(f);
    if (is_root_of_unity(a)) continue;
    const double h = weil_height(a).total;
    smallest = std::min(smallest, h);
    v.require(h > 1e-12, "h(" + f.to_string() + ") = " + std::to_string(h));
    ++found;
  }
  if (v.passed) v.detail << "30 roots of unity at 0; min h over 100 others " << smallest;
}

void supersingular_counts(std::uint64_t, Verdict& v) {
  const std::uint64_t p = 5;
  auto rhs = [](const FqElement& x) { return x * x * x + FqElement::from_int(x.p(), x.f(), 5) * x + FqElement::from_int(x.p(), x.f(), 1); };
  std::uint64_t n1 = 1, n2 = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      const FqElement fx(p, 1, x), fy(p, 1, y);
      if (fy * fy == rhs(fx)) ++n1;
    }
  for (std::uint64_t x = 0; x < p * p; ++x)
    for (std::uint64_t y = 0; y < p * p; ++y) {
      const FqElement fx(p, 2, x % p, x / p), fy(p, 2, y % p, y / p);
      if (fy * fy == rhs(fx)) ++n2;
    }
  const long long a5 = static_cast<long long>(p + 1) - static_cast<long long>(n1);
  const long long a25 = static_cast<long long>(p * p + 1) - static_cast<long long>(n2);
  v.require(a5 == 0, "naive a_5 = " + std::to_string(a5));
  v.require(a25 == -10, "a_25 = " + std::to_string(a25));
  const long long library = count_points(reduce_mod(supersingular_example(), p)).a_p;
  v.require(library == a5, "Legendre count gives a_5 = " + std::to_string(library));
  v.require(trace_q(a5, p) == a25, "a_5^2 - 2p disagrees with the F_25 count");
  if (v.passed) v.detail << "#E(F_5) = " << n1 << ", #E(F_25) = " << n2 << ", a_5 = 0, a_25 = -10";
}

void lubin_tate(std::uint64_t, Verdict& v) {
  const padic::LubinTateReport r = padic::lubin_tate_signature(supersingular_example(), 5, 26);
  v.require(r.low_vanish, "[5](T) has a nonzero coefficient below T^25");
  v.require(r.sign == -1, "T^25 coefficient sign " + std::to_string(r.sign));
  const auto ring = padic::UnramifiedRing::make(5, 2, 20);
  const auto [a, b] = padic::twist_by_sqrt(supersingular_example(), 2, ring);
  const padic::LubinTateReport t = padic::lubin_tate_signature(a, b, 26);
  v.require(t.low_vanish, "twisted [5](T) has a nonzero coefficient below T^25");
  v.require(t.sign == 1, "twisted T^25 coefficient sign " + std::to_string(t.sign));
  if (v.passed) v.detail << "[5](T) = -T^25, twist by sqrt 2 gives +T^25 (mod 5)";
}

void group_lemma(std::uint64_t, Verdict& v) {
  for (std::uint32_t p : {5u, 7u}) {
    const std::uint64_t q = std::uint64_t{p} * p;
    const gl2::Cartan g = gl2::nonsplit_cartan(p);
    const std::uint64_t norm = gl2::normalizer_order(g);
    const gl2::ClosureReport cl = gl2::conjugate_closure(g);
    const std::string at = " at p = " + std::to_string(p);
    v.require(g.group.order() == q - 1, "Cartan order" + at);
    v.require(norm == 2 * (q - 1), "normalizer order" + at);
    v.require(cl.size > q * p, "closure not above p^3" + at);
    v.require(cl.size >= (p - 1) * (p - 1) * q / 2, "closure below (p-1)^2 p^2 / 2" + at);
    v.require(cl.generated_order == gl2::gl2_order(p), "closure does not generate GL2" + at);
    v.require(cl.min_intersection == p - 1 && cl.max_intersection == p - 1, "conjugate intersections" + at);
    if (v.passed) v.detail << "p = " << p << ": " << g.group.order() << ", " << norm << ", " << cl.size << ", "
                           << cl.generated_order << ", meet " << cl.min_intersection << "  ";
  }
}

void matrix_log(std::uint64_t seed, Verdict& v) {
  const gl2::LogCheck add = gl2::log_additivity_exhaustive(5, 2);
  const gl2::LogCheck eq = gl2::log_equivariance_check(5, 2, 10000, seed);
  v.require(add.checked == 625 * 625, "additivity checked " + std::to_string(add.checked) + " pairs");
  v.require(add.failures == 0, std::to_string(add.failures) + " additivity failures");
  v.require(eq.checked == 10000, "equivariance checked " + std::to_string(eq.checked));
  v.require(eq.failures == 0, std::to_string(eq.failures) + " equivariance failures");
  if (v.passed) v.detail << add.checked << " kernel pairs, " << eq.checked << " conjugations, 0 failures";
}

void metric(std::uint64_t seed, Verdict& v) {
  for (const auto& [p, f] : {std::pair<std::uint64_t, int>{5, 2}, {5, 4}, {7, 2}}) {
    const auto ring = padic::UnramifiedRing::make(p, f, 20);
    std::uint64_t failures = 0, nonintegral = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const padic::PadicNumber a = padic::sample_padic(ring, -3, 3, seed, i);
      const padic::Metric2Result r = padic::check_metric2(a);
      if (a.e < 0) ++nonintegral;
      if (!r.passed || (r.inverse_branch_used && !r.inverse_branch_ok)) ++failures;
    }
    const std::string at = " at (" + std::to_string(p) + ", " + std::to_string(f) + ")";
    v.require(failures == 0, std::to_string(failures) + " failures" + at);
    v.require(nonintegral > 0, "non-integral branch not reached" + at);
    if (v.passed) v.detail << "(" << p << "," << f << "): 10000 ok, " << nonintegral << " non-integral  ";
  }
}

void neron_tate(std::uint64_t seed, Verdict& v) {
  const auto corpus = nt::split_multiplicative_corpus(24, seed);
  v.require(corpus.size() >= 20, "corpus has " + std::to_string(corpus.size()) + " pairs");
  double worst = 0.0;
  bool has_split = false;
  for (const auto& pair : corpus) {
    const nt::NTReport local = nt::nt_height_local(pair.curve, pair.point);
    const double limit = nt::nt_height_limit(pair.curve, pair.point, 1e-9).value;
    const double diff = std::fabs(local.total - limit);
    worst = std::max(worst, diff);
    v.require(diff < 1e-6, pair.label + " differs by " + std::to_string(diff));
    for (const auto& t : local.terms) has_split = has_split || t.kind == "split-multiplicative";
  }
  v.require(has_split, "no split multiplicative term in the corpus");

  const CurveQ e(-3024, 46224);
  const PointQ p = PointQ::affine(12, 108), q = PointQ::affine(48, 108);
  auto h = [&e](const PointQ& pt) { return nt::nt_height_limit(e, pt, 1e-9).value; };
  const double hp = h(p), hq = h(q);
  const double par = h(e.add(p, q)) + h(e.add(p, e.neg(q))) - 2 * hp - 2 * hq;
  v.require(std::fabs(par) < 1e-5, "parallelogram defect " + std::to_string(par));
  for (long n : {2, 3, 5}) {
    const double d = h(point_mul(e, p, n)) - static_cast<double>(n * n) * hp;
    v.require(std::fabs(d) < 1e-5, "homogeneity defect at n = " + std::to_string(n));
  }
  if (v.passed) v.detail << corpus.size() << " pairs, max |local - limit| " << worst << ", parallelogram " << par;
}

void haar(std::uint64_t seed, Verdict& v) {
  const nt::HaarEstimate h = nt::haar_integral_lambda(CurveQ(-3024, 46224), 100000, seed);
  v.require(std::fabs(h.mean) < 0.02, "|mean| = " + std::to_string(std::fabs(h.mean)));
  v.require(std::fabs(h.mean) < 3 * h.stderr_, "mean beyond 3 stderr");
  v.require(nt::integral_b2() == 0, "integral of b2 = " + to_string(nt::integral_b2()));
  if (v.passed) v.detail << "mean " << h.mean << ", stderr " << h.stderr_ << ", integral of b2 = 0";
}

void jensen(std::uint64_t, Verdict& v) {
  const equidist::CircleIntegral j = equidist::integral_log();
  v.require(std::fabs(j.value) < 1e-6, "integral = " + std::to_string(j.value));
  if (v.passed) v.detail << "integral " << j.value;
}

void bilu(std::uint64_t, Verdict& v) {
  double prev = INFINITY, last = 0.0;
  for (int n : {50, 100, 200}) {
    const AlgebraicNumber a = AlgebraicNumber::from_min_poly(Polynomial::parse("x^" + std::to_string(n) + "-2"));
    last = equidist::bilu_discrepancy(a, 1).discrepancy;
    v.require(last < prev, "discrepancy does not decrease at n = " + std::to_string(n));
    if (v.passed) v.detail << "n = " << n << ": " << last << "  ";
    prev = last;
  }
  v.require(last < 0.05, "n = 200 discrepancy " + std::to_string(last));
}

void gap_scan(std::uint64_t seed, Verdict& v) {
  const PrimeCertificate cert = find_admissible_prime(supersingular_example(), 1000);
  for (int n : {2, 3}) {
    const GapScanReport r = empirical_gap_scan(supersingular_example(), cert, n, 200, seed);
    const std::string at = " for N = " + std::to_string(n);
    v.require(r.sampled == 200, std::to_string(r.sampled) + " elements sampled" + at);
    v.require(r.violations.empty(), std::to_string(r.violations.size()) + " violations" + at);
    if (v.passed) v.detail << "p = " << cert.p << ", N = " << n << ": min h " << r.min_height << " >= " << r.bound << "  ";
  }
}

void weil_pairing_roots(std::uint64_t, Verdict& v) {
  const Polynomial phi3 = Polynomial::parse("x^2 + x + 1");
  for (auto [a, b] : {std::pair{-1, 1}, std::pair{2, 3}, std::pair{-4, 7}}) {
    const TorsionFieldHandle t = torsion_field(CurveQ(a, b), 3);
    v.require(nfpoly::eval(phi3, t.zeta).is_zero(),
              "no cube root of unity for " + std::to_string(a) + "," + std::to_string(b));
    if (v.passed) v.detail << "[" << a << "," << b << "] degree " << t.field->degree() << "  ";
  }
}

void determinism(std::uint64_t seed, Verdict& v) {
  const std::string s = std::to_string(seed);
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "matrix-log", "--p", "5", "--n", "2", "--samples", "500", "--seed", s},
      {"verify", "metric", "--p", "5", "--f", "2", "--samples", "500", "--seed", s},
      {"haar", "--curve", "-3024,46224", "--samples", "2000", "--seed", s},
      {"gap-scan", "--curve", "5,1", "--n", "2", "--samples", "20", "--seed", s},
      {"equidist", "suz", "--curve", "-3024,46224", "--point", "12,108", "--kmax", "4", "--bins", "16"}};
  for (const auto& args : commands) {
    const Outcome a = execute(args), b = execute(args);
    const std::string name = args[0] == "verify" || args[0] == "equidist" ? args[0] + " " + args[1] : args[0];
    v.require(!a.report.is_null(), name + " produced no report");
    v.require(without_timings(a.report).dump() == without_timings(b.report).dump(), name + " differs between runs");
  }
  if (v.passed) v.detail << commands.size() << " sampling commands reproduce byte for byte";
}

struct Entry {
  int id;
  const char* title;
  double budget;
  Criterion run;
};

const Entry kCriteria[] = {
    {1, "Weil height of 2^(1/n)", 5, weil_height_law},
    {2, "Kronecker: zero exactly on roots of unity", 30, kronecker},
    {3, "supersingular point counts at 5", 1, supersingular_counts},
    {4, "Lubin-Tate sign of [5](T) and its twist", 10, lubin_tate},
    {5, "GL2 group lemma at 5 and 7", 10, group_lemma},
    {6, "matrix logarithm additivity and equivariance", 10, matrix_log},
    {7, "Frobenius metric estimate", 30, metric},
    {8, "Neron-Tate local sum against the limit", 60, neron_tate},
    {9, "archimedean Haar integral", 30, haar},
    {10, "Jensen integral", 5, jensen},
    {11, "Bilu discrepancy trend", 30, bilu},
    {12, "gap scan on Q(E[2]) and Q(E[3])", 120, gap_scan},
    {13, "Weil pairing gives a cube root of unity", 30, weil_pairing_roots},
    {14, "deterministic reports", 60, determinism},
};

}  // namespace

std::vector<CriterionResult> acceptance_suite(std::uint64_t seed,
                                              const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const Entry& s : kCriteria) {
    CriterionResult r{s.id, s.title, false, "", 0.0, s.budget};
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.run(seed, v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(r.seconds <= s.budget, "over the time budget");
    r.passed = v.passed;
    r.detail = v.detail.str();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bogo::cli
