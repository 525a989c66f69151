#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "bogo/cli/cli.hpp"
#include "bogo/equidist/equidist.hpp"
#include "bogo/gl2/gl2.hpp"
#include "bogo/heights/heights.hpp"
#include "bogo/nt/neron_tate.hpp"
#include "bogo/padic/formal_group.hpp"
#include "bogo/padic/unramified.hpp"
#include "bogo/primes/primes.hpp"

namespace bogo::cli {

namespace {

struct Config {
  std::string command;
  std::string curve, point, minpoly, method = "both", out, csv;
  std::uint64_t p = 5, pmax = 1000, lmax = kDefaultEllMax, samples = 10000, seed = 0;
  int f = 2, n = 2, m = 1, kmax = 6, bins = 16, precision = padic::kDefaultPrecision;
  long twist = 0;
  double tol = 1e-8, c = 0.0;
};

/// A check result; exact comparisons carry tolerance 0.
Json check(const std::string& name, bool passed, Json value, Json expected = nullptr, double tolerance = 0.0) {
  return Json{{"name", name}, {"passed", passed}, {"value", std::move(value)}, {"expected", std::move(expected)},
              {"tolerance", tolerance}};
}

/// Failure that still yields a report (exit code 1).
struct ReportedFailure {
  std::string type, message;
  Json detail;
};

PointQ parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("point must be given as x,y");
  return PointQ::affine(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

CurveQ parse_curve(const std::string& text) {
  if (text.empty()) throw DomainError("--curve is required");
  return CurveQ::parse(text);
}

Json nt_report_json(const nt::NTReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"place", t.place == 0 ? Json("infinity") : Json(t.place)}, {"lambda", t.lambda}, {"kind", t.kind}});
  return Json{{"total", r.total}, {"method", r.method}, {"terms", terms}};
}

void cmd_heights(const Config& c, Json& result, Json& checks) {
  const AlgebraicNumber a = AlgebraicNumber::from_min_poly(Polynomial::parse(c.minpoly));
  const HeightProfile h = weil_height(a);
  const auto rou = is_root_of_unity(a);
  result = {{"minpoly", a.min_poly().to_string()},
            {"degree", h.degree},
            {"height", h.total},
            {"error_bound", h.error_bound},
            {"archimedean", h.archimedean},
            {"finite_aggregate", h.finite_aggregate},
            {"root_of_unity_order", rou ? Json(*rou) : Json(nullptr)}};
  checks.push_back(check("height is nonnegative", h.total >= -h.error_bound, h.total, ">= 0", h.error_bound));
  checks.push_back(check("zero exactly on roots of unity", rou.has_value() == (h.total <= 1e-12), h.total,
                         rou ? "0" : "> 0", 1e-12));
}

void cmd_scan_primes(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  PrimeCertificate cert;
  try {
    cert = find_admissible_prime(e, c.pmax, c.lmax);
  } catch (const NotFoundBelowBound& ex) {
    checks.push_back(check("admissible prime found", false, nullptr, "p <= " + std::to_string(c.pmax)));
    throw ReportedFailure{"NotFoundBelowBound", ex.what(), {{"bound", ex.bound()}}};
  }
  Json ev = Json::array();
  for (const auto& w : cert.evidence)
    ev.push_back({{"ell", w.ell}, {"a_mod_p", w.a_mod_p}, {"rules_out", to_string(w.rules_out)}});
  result = {{"p", cert.p},     {"q", cert.q},   {"a_p", cert.a_p},           {"a_q", cert.a_q},
            {"j_tilde", cert.j_tilde}, {"P1", cert.p1}, {"P2", to_string(cert.p2)}, {"evidence", ev}};
  checks.push_back(check("P1: supersingular with j~ not in {0, 1728}", cert.p1, cert.a_p, 0));
  checks.push_back(check("P2: surjectivity witnessed", cert.p2 == P2Status::Verified, to_string(cert.p2), to_string(P2Status::Verified)));
  const long long expect_q = -2 * static_cast<long long>(cert.p);
  checks.push_back(check("a_q = -2p", cert.a_q == expect_q, cert.a_q, expect_q));
}

void cmd_group_lemma(const Config& c, Json& result, Json& checks) {
  if (c.p > 13) throw DomainError("--p must be at most 13");
  const auto p = static_cast<std::uint32_t>(c.p);
  const gl2::Cartan g = gl2::nonsplit_cartan(p);
  const std::uint64_t norm = gl2::normalizer_order(g);
  const gl2::ClosureReport cl = gl2::conjugate_closure(g);
  const std::uint64_t p3 = c.p * c.p * c.p, bound = (c.p - 1) * (c.p - 1) * c.p * c.p / 2;
  result = {{"p", c.p},
            {"cartan", g.group.order()},
            {"normalizer", norm},
            {"closure", cl.size},
            {"conjugates", cl.conjugates},
            {"generated", cl.generated_order},
            {"gl2_order", gl2::gl2_order(p)},
            {"intersection_min", cl.min_intersection},
            {"intersection_max", cl.max_intersection}};
  checks.push_back(check("cartan order p^2 - 1", g.group.order() == c.p * c.p - 1, g.group.order(), c.p * c.p - 1));
  checks.push_back(check("normalizer order 2(p^2 - 1)", norm == 2 * (c.p * c.p - 1), norm, 2 * (c.p * c.p - 1)));
  checks.push_back(check("closure larger than p^3", cl.size > p3, cl.size, "> " + std::to_string(p3)));
  checks.push_back(check("closure at least (p-1)^2 p^2 / 2", cl.size >= bound, cl.size, ">= " + std::to_string(bound)));
  checks.push_back(check("closure generates GL2", cl.generated_order == gl2::gl2_order(p), cl.generated_order,
                         gl2::gl2_order(p)));
  checks.push_back(check("distinct conjugates meet in the scalars",
                         cl.min_intersection == c.p - 1 && cl.max_intersection == c.p - 1,
                         Json::array({cl.min_intersection, cl.max_intersection}), c.p - 1));
}

void cmd_matrix_log(const Config& c, Json& result, Json& checks) {
  if (c.p > 13) throw DomainError("--p must be at most 13");
  const auto p = static_cast<std::uint32_t>(c.p);
  const gl2::LogCheck add = gl2::log_additivity_exhaustive(p, c.n);
  const gl2::LogCheck eq = gl2::log_equivariance_check(p, c.n, c.samples, c.seed);
  result = {{"p", c.p},
            {"n", c.n},
            {"additivity", {{"checked", add.checked}, {"failures", add.failures}}},
            {"equivariance", {{"checked", eq.checked}, {"failures", eq.failures}}}};
  checks.push_back(check("L(M1 M2) = L(M1) + L(M2) on all kernel pairs", add.failures == 0, add.failures, 0));
  checks.push_back(check("L(s psi s^-1) = s L(psi) s^-1", eq.failures == 0, eq.failures, 0));
}

void cmd_metric(const Config& c, Json& result, Json& checks) {
  const auto ring = padic::UnramifiedRing::make(c.p, c.f, c.precision);
  std::uint64_t failures = 0, nonintegral = 0, vacuous = 0, inverse_bad = 0, exact = 0;
  Json first_failure = nullptr;
  for (std::uint64_t i = 0; i < c.samples; ++i) {
    const padic::PadicNumber a = padic::sample_padic(ring, -3, 3, c.seed, i);
    const padic::Metric2Result r = padic::check_metric2(a);
    if (a.e < 0) ++nonintegral;
    if (r.vacuous) ++vacuous;
    if (r.lhs_exact) ++exact;
    if (r.inverse_branch_used && !r.inverse_branch_ok) ++inverse_bad;
    if (!r.passed) {
      if (failures == 0) first_failure = {{"index", i}, {"note", r.note}};
      ++failures;
    }
  }
  result = {{"p", c.p},          {"f", c.f},       {"precision", c.precision},      {"samples", c.samples},
            {"failures", failures}, {"nonintegral", nonintegral}, {"vacuous", vacuous}, {"exact_lhs", exact},
            {"inverse_branch_failures", inverse_bad}, {"first_failure", first_failure}};
  checks.push_back(check("|phi_q(a) - a^q| bound on every sample", failures == 0, failures, 0));
  checks.push_back(check("inverse-branch identity", inverse_bad == 0, inverse_bad, 0));
  checks.push_back(check("non-integral branch exercised", nonintegral > 0 || c.samples == 0, nonintegral, "> 0"));
}

void cmd_formal_group(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  const int prec = static_cast<int>(c.p * c.p) + 1;
  padic::LubinTateReport r;
  if (c.twist == 0) {
    r = padic::lubin_tate_signature(e, c.p, prec);
  } else {
    const auto ring = padic::UnramifiedRing::make(c.p, 2, c.precision);
    const auto [a, b] = padic::twist_by_sqrt(e, c.twist, ring);
    r = padic::lubin_tate_signature(a, b, prec);
  }
  result = {{"p", r.p},           {"q", r.q},         {"twist", c.twist}, {"sign", r.sign}, {"low_vanish", r.low_vanish},
            {"first_nonzero", r.first_nonzero}, {"coeff_q_mod_p", r.coeff_q}};
  checks.push_back(check("[p](T) = 0 mod (p, T^q)", r.low_vanish, r.first_nonzero, r.q));
  checks.push_back(check("T^q coefficient is +-1 mod p", r.sign != 0, r.sign, "+1 or -1"));
}

void cmd_nt_height(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  const PointQ p = parse_point(c.point);
  if (!e.on_curve(p)) throw DomainError("point is not on the curve");
  if (c.method != "limit" && c.method != "local" && c.method != "residual" && c.method != "both")
    throw DomainError("--method must be limit, local, residual or both");
  result = {{"curve", e.to_string()}, {"point", c.point}, {"method", c.method}};
  std::optional<nt::LimitResult> lim;
  if (c.method == "limit" || c.method == "both") {
    lim = nt::nt_height_limit(e, p, c.tol);
    result["limit"] = {{"value", lim->value}, {"error_bound", lim->error_bound}, {"doublings", lim->doublings}};
    checks.push_back(check("limit is nonnegative", lim->value >= -lim->error_bound, lim->value, ">= 0", lim->error_bound));
  }
  if (c.method != "limit") {
    try {
      const nt::NTReport r = nt::nt_height_local(e, p, c.method == "residual");
      result["local"] = nt_report_json(r);
      if (lim)
        checks.push_back(check("local sum agrees with the limit", std::fabs(r.total - lim->value) < 1e-6,
                               r.total - lim->value, 0, 1e-6));
      for (const auto& t : r.terms)
        if (t.kind == "good")
          checks.push_back(check("good-reduction term at " + std::to_string(t.place) + " is nonnegative", t.lambda >= 0,
                                 t.lambda, ">= 0"));
    } catch (const nt::UnsupportedReductionType& ex) {
      checks.push_back(check("every bad prime split multiplicative", false, ex.prime(), "use --method residual"));
      throw ReportedFailure{"UnsupportedReductionType", ex.what(), {{"prime", ex.prime()}}};
    }
  }
}

void cmd_haar(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  const nt::HaarEstimate h = nt::haar_integral_lambda(e, c.samples, c.seed);
  result = {{"curve", e.to_string()}, {"samples", h.samples}, {"mean", h.mean}, {"stderr", h.stderr_},
            {"integral_b2", to_string(nt::integral_b2())}};
  checks.push_back(check("integral of b2 is 0", nt::integral_b2() == 0, to_string(nt::integral_b2()), "0"));
  checks.push_back(check("mean within 3 stderr of 0", std::fabs(h.mean) < 3 * h.stderr_, h.mean, 0, 3 * h.stderr_));
}

void cmd_bilu(const Config& c, Json& result, Json& checks) {
  const AlgebraicNumber a = AlgebraicNumber::from_min_poly(Polynomial::parse(c.minpoly));
  const equidist::DiscrepancyReport r = equidist::bilu_discrepancy(a, c.m);
  result = {{"subject", r.subject},       {"m", c.m},           {"average", r.average}, {"integral", r.integral},
            {"discrepancy", r.discrepancy}, {"conjugates", r.count}, {"height", r.height}, {"applicable", r.applicable}};
  checks.push_back(check("not a root of unity", r.applicable, r.applicable, true));
}

void cmd_suz(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  const auto steps = equidist::suz_fiber_demo(e, parse_point(c.point), c.kmax, c.bins);
  Json rows = Json::array();
  bool monotone = true;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    rows.push_back({{"k", steps[k].k},
                    {"points", steps[k].points},
                    {"height", steps[k].height},
                    {"chi_square", steps[k].chi_square},
                    {"histogram", steps[k].histogram}});
    if (k > 0 && steps[k].chi_square > steps[k - 1].chi_square + 1e-12) monotone = false;
  }
  result = {{"curve", e.to_string()}, {"point", c.point}, {"bins", c.bins}, {"steps", rows}};
  checks.push_back(check("chi-square non-increasing in k", monotone, steps.back().chi_square, "non-increasing", 1e-12));
  if (!c.csv.empty()) {
    std::ofstream csv(c.csv);
    if (!csv) throw DomainError("cannot write " + c.csv);
    csv << "k,bin,count\n";
    for (const auto& s : steps)
      for (std::size_t b = 0; b < s.histogram.size(); ++b) csv << s.k << ',' << b << ',' << s.histogram[b] << '\n';
  }
}

void cmd_jensen(const Config& c, Json& result, Json& checks) {
  const equidist::CircleIntegral j = equidist::integral_log(c.tol);
  result = {{"integral", j.value}, {"error_estimate", j.error}};
  checks.push_back(check("integral of log|z - 1| over the circle is 0", std::fabs(j.value) < 1e-6, j.value, 0, 1e-6));
}

void cmd_choose_m(const Config& c, Json& result, Json& checks) {
  const double cc = c.c > 0 ? c.c : gap_constants(c.p).unramified;
  const equidist::TruncationParams t = equidist::choose_m(cc);
  result = {{"c", cc}, {"m", t.m}, {"integral_f_m", t.integral}, {"log_term", t.log_term}};
  checks.push_back(check("integral of f_m < c/2", t.integral < cc / 2, t.integral, cc / 2));
  checks.push_back(check("log(1 + 2 e^-m) <= c/2", t.log_term <= cc / 2, t.log_term, cc / 2));
}

void cmd_gap_scan(const Config& c, Json& result, Json& checks) {
  const CurveQ e = parse_curve(c.curve);
  PrimeCertificate cert;
  try {
    cert = find_admissible_prime(e, c.pmax, c.lmax);
  } catch (const NotFoundBelowBound& ex) {
    checks.push_back(check("admissible prime found", false, nullptr, "p <= " + std::to_string(c.pmax)));
    throw ReportedFailure{"NotFoundBelowBound", ex.what(), {{"bound", ex.bound()}}};
  }
  const GapScanReport r = empirical_gap_scan(e, cert, c.n, c.samples, c.seed);
  Json viol = Json::array();
  for (const auto& v : r.violations) viol.push_back({{"element", v.element}, {"height", v.height}});
  result = {{"p", r.p},
            {"n", r.n},
            {"field_degree", r.field_degree},
            {"bound", r.bound},
            {"sampled", r.sampled},
            {"roots_of_unity_skipped", r.roots_of_unity_skipped},
            {"min_height", std::isfinite(r.min_height) ? Json(r.min_height) : Json(nullptr)},
            {"violations", viol}};
  checks.push_back(check("no element below log(p/2)/(p^2+1)", r.violations.empty(), r.violations.size(), 0));
}

void cmd_all(const Config& c, Json& result, Json& checks) {
  Json rows = Json::array();
  for (const CriterionResult& r : acceptance_suite(c.seed)) {
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                    {"budget_seconds", r.budget_seconds}});
    checks.push_back(check("criterion " + std::to_string(r.id) + ": " + r.title, r.passed, r.detail));
  }
  result = {{"criteria", rows}};
}

using Handler = void (*)(const Config&, Json&, Json&);

Json config_json(const Config& c, const CLI::App* sub) {
  Json j = Json::object();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_name() == "--help") continue;
    const std::string value = o->count() > 0 ? o->as<std::string>() : o->get_default_str();
    if (!value.empty()) j[o->get_name().substr(2)] = value;
  }
  j["command"] = c.command;
  return j;
}

}  // namespace

Json without_timings(Json report) {
  if (report.is_object()) report.erase("timings");
  return report;
}

Outcome execute(const std::vector<std::string>& args) {
  Config c;
  CLI::App app{"Verification toolkit for heights on torsion fields of elliptic curves", "bogo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.option_defaults()->always_capture_default();
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  std::vector<std::pair<CLI::App*, std::string>> names;

  auto common = [&c](CLI::App* s) { s->add_option("--out", c.out, "Also write the JSON report to this path"); };
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help, Handler h) {
    CLI::App* s = parent->add_subcommand(name, help);
    common(s);
    handlers.emplace_back(s, h);
    names.emplace_back(s, full);
    return s;
  };
  auto seed = [&c](CLI::App* s) { s->add_option("--seed", c.seed, "Sampling seed")->required(); };

  CLI::App* s = add(&app, "heights", "heights", "Weil height of an algebraic number", cmd_heights);
  s->add_option("--minpoly", c.minpoly, "Minimal polynomial, e.g. \"x^3-2\"")->required();

  s = add(&app, "scan-primes", "scan-primes", "Smallest prime satisfying P1 and P2", cmd_scan_primes);
  s->add_option("--curve", c.curve, "a,b for y^2 = x^3 + a x + b")->required();
  s->add_option("--pmax", c.pmax, "Largest prime to try");
  s->add_option("--lmax", c.lmax, "Largest Frobenius witness prime");

  CLI::App* verify = app.add_subcommand("verify", "Group lemma, matrix logarithm, metric and formal group checks");
  verify->require_subcommand(1);
  s = add(verify, "group-lemma", "verify group-lemma", "Conjugates of the non-split Cartan subgroup", cmd_group_lemma);
  s->add_option("--p", c.p, "Prime, 5 <= p <= 13");
  s = add(verify, "matrix-log", "verify matrix-log", "Additivity and equivariance of the matrix logarithm",
          cmd_matrix_log);
  s->add_option("--p", c.p, "Prime");
  s->add_option("--n", c.n, "Level exponent, N = p^n");
  s->add_option("--samples", c.samples, "Equivariance samples");
  seed(s);
  s = add(verify, "metric", "verify metric", "Frobenius metric estimate in unramified extensions", cmd_metric);
  s->add_option("--p", c.p, "Prime");
  s->add_option("--f", c.f, "Residue degree");
  s->add_option("--samples", c.samples, "Number of sampled elements");
  s->add_option("--precision", c.precision, "p-adic precision");
  seed(s);
  s = add(verify, "formal-group", "verify formal-group", "[p](T) modulo p", cmd_formal_group);
  s->add_option("--curve", c.curve, "a,b")->required();
  s->add_option("--p", c.p, "Supersingular prime");
  s->add_option("--twist", c.twist, "Twist by sqrt(d) over the unramified quadratic extension");
  s->add_option("--precision", c.precision, "p-adic precision for the twist");

  s = add(&app, "nt-height", "nt-height", "Canonical height by the limit and by local heights", cmd_nt_height);
  s->add_option("--curve", c.curve, "a,b")->required();
  s->add_option("--point", c.point, "x,y")->required();
  s->add_option("--method", c.method, "limit, local, residual or both");
  s->add_option("--tol", c.tol, "Limit tolerance");

  s = add(&app, "haar", "haar", "Monte Carlo integral of the archimedean local height", cmd_haar);
  s->add_option("--curve", c.curve, "a,b")->required();
  s->add_option("--samples", c.samples, "Number of samples");
  seed(s);

  CLI::App* eq = app.add_subcommand("equidist", "Equidistribution checks");
  eq->require_subcommand(1);
  s = add(eq, "bilu", "equidist bilu", "Average of f_m over conjugates", cmd_bilu);
  s->add_option("--minpoly", c.minpoly, "Minimal polynomial")->required();
  s->add_option("--m", c.m, "Truncation level");
  s = add(eq, "suz", "equidist suz", "Division points of a point binned in period coordinates", cmd_suz);
  s->add_option("--curve", c.curve, "a,b")->required();
  s->add_option("--point", c.point, "x,y")->required();
  s->add_option("--kmax", c.kmax, "Largest k, at most 8");
  s->add_option("--bins", c.bins, "Number of bins, a square");
  s->add_option("--csv", c.csv, "Write the histograms as CSV");
  s = add(eq, "jensen", "equidist jensen", "Integral of log|z - 1| over the unit circle", cmd_jensen);
  s->add_option("--tol", c.tol, "Quadrature tolerance");
  s = add(eq, "choose-m", "equidist choose-m", "Truncation level for a gap constant", cmd_choose_m);
  s->add_option("--c", c.c, "Gap constant (default: log(p/2)/(p^2+1))");
  s->add_option("--p", c.p, "Prime for the default constant");

  s = add(&app, "gap-scan", "gap-scan", "Heights of seeded elements of Q(E[N]) against the gap bound", cmd_gap_scan);
  s->add_option("--curve", c.curve, "a,b")->required();
  s->add_option("--n", c.n, "Torsion level N in {1, 2, 3}");
  s->add_option("--samples", c.samples, "Number of elements");
  s->add_option("--pmax", c.pmax, "Largest prime to try");
  s->add_option("--lmax", c.lmax, "Largest Frobenius witness prime");
  seed(s);

  s = add(&app, "all", "all", "Every acceptance criterion", cmd_all);
  seed(s);

  std::vector<const char*> argv{"bogo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  Outcome outcome;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::CallForVersion&) {
    outcome.message = kToolVersion;
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = e.what();
    return outcome;
  }

  const CLI::App* chosen = nullptr;
  Handler handler = nullptr;
  for (const auto& [sub, h] : handlers)
    if (sub->parsed()) chosen = sub, handler = h;
  for (const auto& [sub, name] : names)
    if (sub == chosen) c.command = name;

  const auto start = std::chrono::steady_clock::now();
  Json result = Json::object(), checks = Json::array(), error = nullptr;
  try {
    handler(c, result, checks);
  } catch (const ReportedFailure& f) {
    error = {{"type", f.type}, {"message", f.message}, {"detail", f.detail}};
  } catch (const PrecisionError& e) {
    error = {{"type", "PrecisionError"}, {"message", e.what()}};
  } catch (const Error& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = e.what();
    return outcome;
  } catch (const std::invalid_argument& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = e.what();
    return outcome;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t passed = 0, failed = 0;
  for (const auto& ch : checks) (ch["passed"].get<bool>() ? passed : failed)++;
  const bool ok = failed == 0 && error.is_null();
  outcome.report = {{"schema", kSchemaVersion},
                    {"tool", {{"name", "bogo"}, {"version", kToolVersion}}},
                    {"command", c.command},
                    {"config", config_json(c, chosen)},
                    {"result", result},
                    {"checks", checks},
                    {"error", error},
                    {"summary", {{"passed", passed}, {"failed", failed}, {"ok", ok}}},
                    {"timings", {{"wall_seconds", secs}}}};
  outcome.exit_code = ok ? kExitOk : kExitCheckFailed;
  return outcome;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const Outcome o = execute(args);
  if (o.report.is_null()) {
    (o.exit_code == kExitOk ? out : err) << o.message << '\n';
    return o.exit_code;
  }
  const std::string text = o.report.dump(2);
  out << text << '\n';
  const Json& cfg = o.report["config"];
  if (cfg.contains("out")) {
    std::ofstream f(cfg["out"].get<std::string>());
    if (!f) {
      err << "cannot write " << cfg["out"].get<std::string>() << '\n';
      return kExitUsage;
    }
    f << text << '\n';
  }
  return o.exit_code;
}

}  // namespace bogo::cli
