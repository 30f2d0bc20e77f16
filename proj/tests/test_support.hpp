#pragma once

#include <cstdlib>
#include <random>

// Fixed default seed for every randomized property test; override with
// RUNCUBE_TEST_SEED for exploratory runs.
inline std::mt19937_64 test_rng() {
  std::uint64_t seed = 20240807;
  if (const char* env = std::getenv("RUNCUBE_TEST_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }
  return std::mt19937_64{seed};
}
