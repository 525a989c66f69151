#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bogo::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "bogo-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct Outcome {
  int exit_code = kExitOk;
  /// Null on usage errors.
  Json report;
  /// Help text or the usage error message.
  std::string message;
};

/// Runs one command line (without the program name).
Outcome execute(const std::vector<std::string>& args);

/// execute() plus I/O: the report goes to `out` and to --out PATH when given;
/// usage errors go to `err` and never produce a report.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The report with its "timings" member removed.
Json without_timings(Json report);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Acceptance criteria 1 to 14, in order. A criterion passes only when its
/// checks pass within its time budget.
std::vector<CriterionResult> acceptance_suite(std::uint64_t seed,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace bogo::cli
