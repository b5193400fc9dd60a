#pragma once

#include "probelab/probes.hpp"

namespace probelab {

/// Nonzero lattice points of P ∩ (-P), closed under negation.
struct SymmetricSet {
  std::vector<LatVec> points;  // sorted lexicographically
};

/// Requires 0 in the interior (translate monotone polytopes first).
SymmetricSet symmetric_points(const Polytope& p);

struct BasisSearch {
  bool found = false;
  std::vector<LatVec> basis;  // lexicographically first unimodular subset
};

/// The symmetric set contains a lattice basis.
BasisSearch weak_ewald(const Polytope& p);

/// weak_ewald restricted to the symmetric points on each facet.
std::vector<bool> strong_ewald(const Polytope& p);

struct StarMembership {
  bool in_star_capital = false;  // on some facet of the face's facet set
  bool in_star_lower = false;    // on at least two of them
  bool in_star_star = false;     // capital and not lower
};

StarMembership star_membership(const Polytope& p, const Face& f,
                               const LatVec& v);

struct StarVerdict {
  int face_index = -1;
  Face face;
  bool satisfied = false;
  std::optional<LatVec> witness;  // lambda in Star*(f) with -lambda off Star(f)
};

struct StarReport {
  bool all_satisfied = false;
  std::vector<StarVerdict> verdicts;  // one per proper face, faces() order
};

StarReport star_ewald(const Polytope& p);

/// One line per face: "face={ids} dim=d satisfied={0,1} witness=(...)".
std::string format_star_report(const StarReport& report);

/// Constructive displacement for a polytope with the distinguished point at
/// the origin (monotone ones translated so u0 = 0; reflexive inputs work
/// as-is): locates the cone piece containing u, turns the star witness of
/// its face into a probe, and re-verifies the strict halfway test — no
/// smoothness assumption enters unverified. Throws "u0 excluded" at u = 0
/// and "not star Ewald" when the face has no witness.
DisplaceReport synthesize_displacement(const Polytope& p, const RatVec& u);
DisplaceReport synthesize_displacement(const Polytope& p, const RatVec& u,
                                       const StarReport& report);

/// Vertex special point in a facet: v plus the primitive directions of the
/// edges from v that lie in the facet.
RatVec special_point_s(const Polytope& p, int vertex_id, int facet_id);

/// Facet ids of unimodular triangle facets with all edges of affine length 1.
/// Defined for 3-dimensional polytopes only.
std::vector<int> small_facets(const Polytope& p);

}  // namespace probelab
