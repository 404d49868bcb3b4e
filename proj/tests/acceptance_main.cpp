// Standalone gate: runs every release criterion and prints one line each.
// Exits nonzero if any criterion fails.

#include <gwd/acceptance.hpp>

#include <cstdio>

int main() {
  gwd::AcceptanceReport report = gwd::run_acceptance();
  int passed = 0;
  for (const gwd::CriterionResult& r : report.results) {
    std::printf("%s  %2d  %s  (%.1f ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.label.c_str(), r.ms);
    if (!r.pass) std::printf("      %s\n", r.detail.c_str());
    if (r.pass) ++passed;
  }
  std::printf("%d/%zu criteria passed\n", passed, report.results.size());
  return report.all_pass ? 0 : 1;
}
