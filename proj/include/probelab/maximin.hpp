#pragma once

#include "probelab/lp.hpp"
#include "probelab/polytope.hpp"

namespace probelab {

/// Facet functional or a ghost: a linear function kappa - <eta, .> that is
/// strictly positive on the whole polytope when ghost.
struct AffineFunctional {
  LatVec eta;  // primitive
  Rat kappa;
  bool ghost = false;
};

/// Snapshot of the region P_k as an H-representation over the original
/// coordinates: the polytope's rows plus accumulated cuts and equalities.
struct RegionSnapshot {
  std::vector<LinearConstraint> leq;  // a.x <= b
  std::vector<LinearConstraint> eq;   // a.x == b
};

struct MaximinRound {
  Rat level;                 // S_k
  std::vector<int> tight;    // I_k: functional ids pinned at S_k this round
  int dim = 0;               // dim P_k
  RegionSnapshot region;     // P_k
};

struct MaximinTrace {
  std::vector<AffineFunctional> functionals;  // facets first, then ghosts
  std::vector<MaximinRound> rounds;
  RatVec v0;
};

struct MaximinStepResult {
  Rat level;               // S_{k+1}
  std::vector<int> tight;  // I_{k+1}
  RegionSnapshot region;   // P_{k+1}
  int dim = 0;
};

/// One maximin round: solves max t s.t. ell_i(u) >= t for active functionals
/// over the region, cuts the region at the optimum, and identifies the
/// functionals pinned there. `box_lo` supplies exact LP lower bounds.
MaximinStepResult maximin_step(const std::vector<AffineFunctional>& functionals,
                               const std::vector<int>& active,
                               const RegionSnapshot& region, const RatVec& box_lo);

/// Runs the cascade to the central point: S_1 < S_2 < ... with nested regions
/// of weakly decreasing dimension ending in a single point. Ghost functionals
/// participate like facets; each is checked to be positive on the polytope.
MaximinTrace central_point(const Polytope& p,
                           const std::vector<AffineFunctional>& extra = {});

/// Endpoints of a one-dimensional region snapshot.
std::pair<RatVec, RatVec> segment_endpoints(const RegionSnapshot& region, int n,
                                            const RatVec& box_lo);

/// Plain-text serialization: one "k S_k dim I_k={ids}" line per round, then
/// "v0 = (...)".
std::string format_trace(const MaximinTrace& trace);

}  // namespace probelab
