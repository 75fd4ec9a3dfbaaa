#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grdet/determinants.hpp"

namespace grdet {

struct SelftestOptions {
  std::uint64_t seed = 20240101;
  // Multiplies the default sample counts; 1.0 runs in a few seconds.
  double scale = 1.0;
  // Factored SD16 path under test. Replaceable so that mutation tests can
  // confirm the oracle sweep notices a corrupted formula.
  std::function<FactoredSD16(const GroupRingElement&)> sd16 = sd16_factored;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

// Reduced-scale versions of the invariant sweeps: factored formulas against
// the oracle, witness round trips, the U^2 + 2V^2 representations and the
// classifier cross-check.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options = {});

}  // namespace grdet
