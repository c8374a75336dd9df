#pragma once

#include <string>
#include <vector>

#include "mfg/ep_point.hpp"

namespace mfg {

/// Exhaustive-verification bounds: points with |preperiod| <= preperiod and
/// |period| <= period; word/table depth <= depth.
struct Bounds {
  int preperiod = 6;
  int period = 4;
  int depth = 8;
};

/// Bounds from "P,Q,D" (the MFG_BOUNDS format).
Bounds parse_bounds(const std::string& s);

struct SweepFailure {
  std::string identity;
  std::string point;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::vector<SweepFailure> failures;
  long checks = 0;
  bool ok() const { return failures.empty(); }
};

}  // namespace mfg
