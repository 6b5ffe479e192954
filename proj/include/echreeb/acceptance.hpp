#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace echreeb {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  // Diagnostic knob: shifts the elliptic rotation class used by the
  // multiple-cover index table, which moves its negativity threshold.
  double rotation_shift = 0.0;
};

// Runs the full verification battery. Deterministic: all randomized suites
// use fixed seeds recorded next to each criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_pass(const std::vector<CriterionResult>& results);

void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace echreeb
