#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aprings/limits.hpp"

namespace aprings {

struct CheckResult {
  std::string id;
  int criterion = 0;
  std::string title;
  std::vector<std::string> tags;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<std::string> suite_names();

// Check ids and tags of a suite, in execution order. Throws
// Error(InvalidArgument) for an unknown suite.
std::vector<std::pair<std::string, std::vector<std::string>>> suite_checks(const std::string& suite);

// Runs the checks whose id or one of whose tags contains `filter` (all
// when empty). `on_result` is called as each check finishes.
std::vector<CheckResult> run_suite(const std::string& suite, const std::string& filter = "",
                                   const std::function<void(const CheckResult&)>& on_result = {});

// Finite models shipped as presets: the Witt-like quotients and Z/n for
// n = 2..12.
std::vector<std::string> bundled_finite_models();

}  // namespace aprings
