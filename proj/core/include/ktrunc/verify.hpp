#pragma once

#include <string>
#include <vector>

namespace ktrunc {

// One named property suite.  Every module's documented invariants appear here
// exactly once; expected_suite_names() is the frozen checklist the registry
// is validated against (and the verify command asserts the match).
struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string counterexample;  // first failure, fully printed
};

std::vector<std::string> expected_suite_names();
std::vector<std::string> registered_suite_names();

// Runs one suite (throws std::invalid_argument for unknown names).
SuiteResult run_suite(const std::string& name, bool quick);

// Runs everything in registry order.
std::vector<SuiteResult> run_all_suites(bool quick);

}  // namespace ktrunc
