#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmana {

struct CheckResult {
  std::string name;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

const std::vector<std::string>& suite_names();

// trials <= 0 selects the suite default.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, int trials);

}  // namespace qmana
