#pragma once

#include "fieldpair/subquantum.hpp"

#include <string>
#include <vector>

namespace fieldpair {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;

  bool passed() const { return residual <= tolerance; }
};

/// Deterministic invariant suite over fixed grids (random axis pairs use a
/// fixed internal seed). `reading` selects the conditional table used by the
/// consistency and route-agreement checks.
std::vector<CheckResult> run_invariant_checks(ConditionalReading reading = ConditionalReading::Corrected);

} // namespace fieldpair
