// Acceptance suite: runs every reproduction criterion at full strength and
// prints one pass/fail line per criterion. Exit status is the number of
// failing criteria.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "runcube/repro.hpp"

int main() {
  int threads = 1;
  if (const char* env = std::getenv("RUNCUBE_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) threads = value;
  }
  const auto results = runcube::run_acceptance_suite(threads);
  std::cout << runcube::format_results(results);
  int failures = 0;
  for (const auto& r : results) failures += !r.pass;
  return failures;
}
