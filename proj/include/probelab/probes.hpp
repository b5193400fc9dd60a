#pragma once

#include "probelab/polytope.hpp"

namespace probelab {

/// Half-open segment entering the polytope at a relative-interior point of a
/// facet along an integrally transverse inward direction.
struct Probe {
  int facet_id = 0;   // entry facet
  LatVec direction;   // primitive, <eta_F, direction> = -1
  RatVec entry;       // on the relative interior of the entry facet
  RatVec exit;        // on the boundary
  Rat length;         // affine length = exit ray parameter
};

struct DisplaceReport {
  RatVec point;
  bool displaced = false;
  std::optional<Probe> witness;
  Rat position;               // affine distance entry -> point, when witnessed
  long searched_directions = 0;
  long direction_bound = 0;   // "not displaced" is relative to this bound
};

/// The probe through u entering facet F in direction lambda, or nullopt when
/// lambda is not transverse-inward for F or the entry point leaves the
/// relative interior of F. Throws "point not interior" when u is not interior.
std::optional<Probe> probe_through(const Polytope& p, const RatVec& u,
                                   int facet_id, const LatVec& lambda);

/// Strictly-less-than-halfway test. u must lie on the open probe segment.
bool displaces(const Probe& probe, const RatVec& u);

/// All primitive integer vectors of max-norm <= bound, in lexicographic
/// order.
std::vector<LatVec> candidate_directions(int dim, long bound);

/// Vertex-coordinate magnitude + 2.
long default_direction_bound(const Polytope& p);

/// Deterministic search: facets in id order, directions in lexicographic
/// order, first witness wins.
DisplaceReport find_displacing_probe(const Polytope& p, const RatVec& u,
                                     long bound);
DisplaceReport find_displacing_probe(const Polytope& p, const RatVec& u,
                                     const std::vector<LatVec>& directions,
                                     long bound_label);

/// Direction parallel to every facet other than the entry facet and a unique
/// exit facet.
bool is_inessential_probe(const Polytope& p, const Probe& probe);

}  // namespace probelab
