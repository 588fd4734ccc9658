// Acceptance suite: runs the full claim-by-claim verification and prints one
// pass/fail line per criterion. Exit status 0 iff everything passed.

#include "b3cryst/verify.hpp"

#include <cstdio>

int main() {
  const auto results = b3cryst::run_paper_verification();
  for (const auto& r : results) {
    std::printf("%s criterion %2d (%.2fs, budget %.0fs): %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.seconds, r.budget_seconds, r.name.c_str());
    if (!r.passed) std::printf("     %s\n", r.detail.c_str());
  }
  const bool ok = b3cryst::all_passed(results);
  std::printf("%s\n", ok ? "all criteria passed" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
