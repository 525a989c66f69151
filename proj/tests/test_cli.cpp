#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bogo/cli/cli.hpp"

using namespace bogo::cli;

namespace {

Outcome run_args(std::vector<std::string> args) { return execute(args); }

const Json* find_check(const Json& report, const std::string& prefix) {
  for (const auto& c : report["checks"])
    if (c["name"].get<std::string>().rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("heights report") {
  const Outcome o = run_args({"heights", "--minpoly", "x^3-2"});
  REQUIRE(o.exit_code == kExitOk);
  const Json& r = o.report;
  CHECK(r["schema"] == kSchemaVersion);
  CHECK(r["tool"]["name"] == "bogo");
  CHECK(r["command"] == "heights");
  CHECK(r["config"]["minpoly"] == "x^3-2");
  CHECK(r["result"]["height"].get<double>() == doctest::Approx(0.2310490).epsilon(1e-7));
  CHECK(r["summary"]["ok"] == true);
  CHECK(r["summary"]["failed"] == 0);
  for (const auto& c : r["checks"]) CHECK(c.contains("tolerance"));
  CHECK(r["timings"]["wall_seconds"].get<double>() >= 0);
}

TEST_CASE("group lemma report") {
  const Outcome o = run_args({"verify", "group-lemma", "--p", "5"});
  REQUIRE(o.exit_code == kExitOk);
  const Json& res = o.report["result"];
  CHECK(res["cartan"] == 24);
  CHECK(res["normalizer"] == 48);
  CHECK(res["closure"].get<int>() > 125);
  CHECK(res["generated"] == 480);
  CHECK(o.report["command"] == "verify group-lemma");
}

TEST_CASE("empty prime range reports NotFoundBelowBound with exit 1") {
  const Outcome o = run_args({"scan-primes", "--curve", "1,1", "--pmax", "3"});
  CHECK(o.exit_code == kExitCheckFailed);
  REQUIRE(o.report.is_object());
  CHECK(o.report["error"]["type"] == "NotFoundBelowBound");
  CHECK(o.report["summary"]["ok"] == false);
}

TEST_CASE("scan-primes certifies 131 for 5,1") {
  const Outcome o = run_args({"scan-primes", "--curve", "5,1"});
  REQUIRE(o.exit_code == kExitOk);
  CHECK(o.report["result"]["p"] == 131);
  CHECK(o.report["result"]["a_q"] == -262);
}

TEST_CASE("usage errors produce no report") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"nonsense"}, {"heights"}, {"haar", "--curve", "1,1"},
        {"verify", "metric", "--p", "5"}, {"heights", "--minpoly", "x^2-1"}, {"scan-primes", "--curve", "0,0"},
        {"nt-height", "--curve", "0,-2", "--point", "3,4"}, {"nt-height", "--curve", "0,-2", "--point", "3,5",
                                                              "--method", "guess"}}) {
    const Outcome o = run_args(args);
    CHECK(o.exit_code == kExitUsage);
    CHECK(o.report.is_null());
    CHECK(!o.message.empty());
  }
}

TEST_CASE("help and version exit 0 without a report") {
  const Outcome h = run_args({"--help"});
  CHECK(h.exit_code == kExitOk);
  CHECK(h.report.is_null());
  CHECK(h.message.find("nt-height") != std::string::npos);
  CHECK(run_args({"--version"}).message == kToolVersion);
}

TEST_CASE("nt-height methods") {
  SUBCASE("both methods agree on a split multiplicative curve") {
    const Outcome o = run_args({"nt-height", "--curve", "-3024,46224", "--point", "12,108"});
    REQUIRE(o.exit_code == kExitOk);
    const Json& res = o.report["result"];
    CHECK(res["local"]["total"].get<double>() == doctest::Approx(res["limit"]["value"].get<double>()).epsilon(1e-8));
  }
  SUBCASE("unsupported reduction is a check failure with a report") {
    const Outcome o = run_args({"nt-height", "--curve", "0,-2", "--point", "3,5", "--method", "local"});
    CHECK(o.exit_code == kExitCheckFailed);
    CHECK(o.report["error"]["type"] == "UnsupportedReductionType");
  }
  SUBCASE("residual method covers it") {
    const Outcome o = run_args({"nt-height", "--curve", "0,-2", "--point", "3,5", "--method", "residual"});
    REQUIRE(o.exit_code == kExitOk);
    CHECK(o.report["result"]["local"]["total"].get<double>() == doctest::Approx(0.674788417837).epsilon(1e-9));
  }
  SUBCASE("rational input") {
    const Outcome o = run_args({"nt-height", "--curve", "0,316/343", "--point", "3/7,1", "--method", "limit"});
    CHECK(o.exit_code == kExitOk);
  }
}

TEST_CASE("verify subcommands") {
  CHECK(run_args({"verify", "matrix-log", "--p", "5", "--n", "2", "--samples", "200", "--seed", "1"}).exit_code ==
        kExitOk);
  const Outcome m = run_args({"verify", "metric", "--p", "5", "--f", "2", "--samples", "300", "--seed", "1"});
  CHECK(m.exit_code == kExitOk);
  CHECK(m.report["result"]["nonintegral"].get<int>() > 0);
  const Outcome f = run_args({"verify", "formal-group", "--curve", "5,1", "--p", "5"});
  CHECK(f.exit_code == kExitOk);
  CHECK(f.report["result"]["sign"] == -1);
  const Outcome t = run_args({"verify", "formal-group", "--curve", "5,1", "--p", "5", "--twist", "2"});
  CHECK(t.report["result"]["sign"] == 1);
}

TEST_CASE("equidist subcommands") {
  const Outcome b = run_args({"equidist", "bilu", "--minpoly", "x^50-2", "--m", "1"});
  CHECK(b.exit_code == kExitOk);
  CHECK(b.report["result"]["discrepancy"].get<double>() == doctest::Approx(0.00559).epsilon(0.01));
  const Outcome c = run_args({"equidist", "choose-m", "--p", "5"});
  CHECK(c.report["result"]["m"] == 5);
  CHECK(run_args({"equidist", "jensen"}).exit_code == kExitOk);

  const std::string csv = "test_cli_suz.csv";
  const Outcome s = run_args({"equidist", "suz", "--curve", "-3024,46224", "--point", "12,108", "--kmax", "3",
                              "--bins", "16", "--csv", csv});
  CHECK(s.exit_code == kExitOk);
  CHECK(s.report["result"]["steps"].size() == 4);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,bin,count");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 4 * 16);
  std::remove(csv.c_str());
}

TEST_CASE("sampling commands are deterministic modulo timings") {
  const std::vector<std::string> args{"haar", "--curve", "-3024,46224", "--samples", "1000", "--seed", "7"};
  const Outcome a = run_args(args), b = run_args(args);
  CHECK(without_timings(a.report).dump() == without_timings(b.report).dump());
  CHECK(!without_timings(a.report).contains("timings"));
  const Outcome c = run_args({"haar", "--curve", "-3024,46224", "--samples", "1000", "--seed", "8"});
  CHECK(without_timings(a.report).dump() != without_timings(c.report).dump());
}

TEST_CASE("run writes --out and stdout identically") {
  const std::string path = "test_cli_out.json";
  const std::string a0 = "bogo", a1 = "heights", a2 = "--minpoly", a3 = "x^2-2", a4 = "--out";
  const char* argv[] = {a0.c_str(), a1.c_str(), a2.c_str(), a3.c_str(), a4.c_str(), path.c_str()};
  std::ostringstream out, err;
  CHECK(run(6, argv, out, err) == kExitOk);
  std::ifstream f(path);
  std::stringstream file;
  file << f.rdbuf();
  CHECK(file.str() == out.str());
  CHECK(Json::parse(file.str())["result"]["degree"] == 2);
  std::remove(path.c_str());

  const char* bad[] = {a0.c_str(), "heights", "--out", path.c_str()};
  std::ostringstream out2, err2;
  CHECK(run(4, bad, out2, err2) == kExitUsage);
  CHECK(out2.str().empty());
  CHECK(!std::ifstream(path).good());
}
