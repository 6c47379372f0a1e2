// Acceptance runner: executes the full verification battery and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>

#include "linkpoly/verify.hpp"

int main() {
  const auto results = linkpoly::run_verification(linkpoly::VerifySuite::full);
  bool all_pass = true;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::printf("[%2d/%zu] %s  %-55s %8.2fs  %s\n", index, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
