#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mfg/sweep.hpp"

namespace mfg {

struct CriterionResult {
  int index;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every acceptance criterion at the given bounds, printing one
/// pass/fail line per criterion to `out` when non-null. All checks are
/// exact (zero tolerance).
std::vector<CriterionResult> run_acceptance(const Bounds& bounds, std::ostream* out);

}  // namespace mfg
