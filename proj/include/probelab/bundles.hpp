#pragma once

#include "probelab/polytope.hpp"

namespace probelab {

/// Unimodular coordinate split: ambient x = base_basis * xhat + fiber_comp * y
/// with [base_basis | fiber_comp] unimodular. Fiber-facet normals vanish on
/// the base block.
struct Splitting {
  IntMat base_basis;  // n x k, columns span the base direction lattice
  IntMat fiber_comp;  // n x m, complement columns
  RatVec embed(const RatVec& xhat, const RatVec& y) const;
};

struct BundleSpec {
  Polytope base;   // central slice, dim k
  Polytope fiber;  // dim m
  std::vector<int> fiber_facet_ids;  // into the total polytope
  std::vector<int> base_facet_ids;
  Splitting splitting;
};

/// Checks that the facet partition exhibits the polytope as a fiber bundle
/// over a base, combinatorially equivalent to their product with the correct
/// normal alignment, and returns the witnessing data. When the polytope is
/// monotone the fiber is verified monotone as well.
/// Throws std::runtime_error with a detailed reason on failure.
BundleSpec verify_bundle(const Polytope& p,
                         const std::vector<int>& fiber_facet_ids);

/// Segment bundle over a monotone base (all supports 1): the polytope
/// {-1 <= y <= 1, <x, eta_i> <= 1 - b_i*y}. Fails with the violated edge
/// inequalities when the result is not combinatorially base x segment.
Polytope build_delta1_bundle(const Polytope& base, const std::vector<Int>& b);

/// The (k+1)-dimensional segment bundle over the k-simplex:
/// {-1 <= y <= 1, x_i >= -1, sum x_i <= 1 + alpha*y}, 0 <= alpha <= k.
Polytope build_simplex_bundle(int k, int alpha);

/// Slice through a fixed fiber point, as a polytope in base coordinates.
Polytope slice(const Polytope& p, const Splitting& s, const RatVec& y,
               const Polytope& fiber);

/// Segment bundle cut out by the fiber segment [-w, w], w a symmetric fiber
/// lattice point; a (k+1)-polytope in (base, c) coordinates.
Polytope slab(const Polytope& p, const Splitting& s, const LatVec& w,
              const Polytope& fiber);

/// Product polytope with the factors' facets in order.
Polytope product(const Polytope& a, const Polytope& b);

}  // namespace probelab
