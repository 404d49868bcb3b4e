#pragma once

// Self-contained verification suite: every numbered criterion exercises one
// functional contract of the library (exact norms and moments, coupling
// integrals, selection rules, rotation limits, quasiprobability structure).
// The CLI `verify` subcommand and the acceptance test binary both run this.

#include <string>
#include <vector>

namespace gwd {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  double ms = 0;       // wall time
  std::string detail;  // first failures, empty when passing
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_pass = true;
};

AcceptanceReport run_acceptance();

}  // namespace gwd
