#include <cstdio>
#include <cstdlib>

#include "bogo/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2024;
  int failed = 0;
  bogo::cli::acceptance_suite(seed, [&failed](const bogo::cli::CriterionResult& r) {
    std::printf("[%s] %2d %s (%.2fs, budget %.0fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.budget_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d of 14 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
