#pragma once

// Built-in verification suites: every computed polynomial is cross-checked
// against an independent route (state sums, brute-force counters, the
// deletion-contraction oracle). `small` is a quick smoke subset; `full` runs
// the complete battery, including the transfer-matrix sweep and the
// performance comparison.

#include <string>
#include <vector>

namespace linkpoly {

enum class VerifySuite { small, full };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CheckResult> run_verification(VerifySuite suite);

}  // namespace linkpoly
