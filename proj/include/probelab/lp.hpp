#pragma once

#include "probelab/exact.hpp"

namespace probelab {

struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
};

/// max objective.x  s.t.  leq rows: a.x <= b,  eq rows: a.x == b.
/// When lower_bounds is set the variables are shifted to x' = x - lb >= 0
/// (callers supply a valid bounding box); otherwise each variable is split
/// into a difference of nonnegatives.
struct LpProblem {
  int num_vars = 0;
  RatVec objective;
  std::vector<LinearConstraint> leq;
  std::vector<LinearConstraint> eq;
  std::optional<RatVec> lower_bounds;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  RatVec point;
};

/// Two-phase primal simplex over the rationals with Bland's rule: entering
/// variable of lowest index, leaving row breaking ratio ties by lowest basic
/// variable index. Fully deterministic.
LpSolution exact_lp_max(const LpProblem& problem);

}  // namespace probelab
