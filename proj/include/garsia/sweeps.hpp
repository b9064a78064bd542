#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace garsia {

struct SweepResult {
  std::string suite;
  uint64_t seed = 0;
  size_t cases = 0;
  size_t violations = 0;
  nlohmann::json detail;  // summary fields plus the first violating instance
};

// Named property sweeps behind `lemmas`: seeded, deterministic.
// Suites: separation, jensen, value-bound, dimitrov, turan, power-sum,
// kv, scale-entropy, monotone-ff, recursion-oracle.
SweepResult run_sweep(const std::string& suite, uint64_t seed, size_t count);

const std::vector<std::string>& sweep_names();

}  // namespace garsia
