#pragma once
// End-to-end checks 1..9, shared by the acceptance test binary and the CLI
// `selftest` command.

#include <string>
#include <vector>

namespace quadmaps {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // wall-clock budget in seconds
};

inline constexpr int kCriteriaCount = 9;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids);

// "CRITERION <id> <PASS|FAIL> <title>: <detail> (<seconds>s / <budget>s)"
std::string format_result(const CriterionResult& r);

}  // namespace quadmaps
