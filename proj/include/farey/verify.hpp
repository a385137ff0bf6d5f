#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace farey {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;  // individual comparisons performed
  bool passed = true;
  std::string detail;  // first failing comparison, if any
};

// Runs every property suite at bounds scaled from `depth` (the CLI default is
// 10, at which the suite reproduces the documented norm-14/norm-12/q<=200
// bounds). Exhaustive over vertices, not sampled.
std::vector<PropertyResult> run_all(unsigned depth);

bool all_passed(const std::vector<PropertyResult>& results);

// One line per property: PASS/FAIL, name, number of checks, first failure.
std::string format_report(const std::vector<PropertyResult>& results);

}  // namespace farey
