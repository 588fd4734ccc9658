#pragma once

#include <string>
#include <vector>

namespace b3cryst {

/// One verified claim of the underlying results: pass/fail plus a short
/// account of the computed values and the wall time it took.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Runs the whole claim-by-claim verification suite. Every check is
/// deterministic; randomized property checks use fixed seeds.
std::vector<CheckResult> run_paper_verification();

bool all_passed(const std::vector<CheckResult>& results);

/// Fixed-width table, one line per check.
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace b3cryst
