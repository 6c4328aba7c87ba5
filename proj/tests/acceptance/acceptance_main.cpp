// Prints one line per acceptance criterion and exits nonzero if any failed.

#include <cstdio>
#include <map>

#include "aprings/verify_suite.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  std::map<int, bool> by_criterion;
  const auto results = aprings::run_suite("paper", filter, [&](const aprings::CheckResult& r) {
    std::printf("criterion %2d  %s  %-22s (%.2fs)  %s\n", r.criterion, r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
