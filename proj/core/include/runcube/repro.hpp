#pragma once

#include <string>
#include <vector>

namespace runcube {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = true;
  std::string detail;  // filled on failure
  double seconds = 0.0;
};

/// Runs the full reproduction suite: every identity at its full range, the
/// frozen golden polynomials, and the census cross-validation. Deterministic;
/// intended to finish in well under five minutes.
std::vector<CriterionResult> run_acceptance_suite(int threads = 1);

bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion, e.g. "[PASS] 3. lucas-run recurrence ...".
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace runcube
