#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace thermocap::cli {

// One row of the invariant table: `value` is the measured worst error and the
// check passes when value <= threshold.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

// Cross-module invariant suite: eos gradients, slaving and coexistence
// identities, profile residuals, tension agreement, full-solver stress balance,
// determinant identity and celerity agreement. Random samples are drawn from
// a generator seeded with cfg.seed.
std::vector<CheckResult> run_checks(const RunConfig& cfg);

}  // namespace thermocap::cli
