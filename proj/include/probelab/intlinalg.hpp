#pragma once

#include "probelab/exact.hpp"

namespace probelab {

// Exact rational elimination. Matrices are row-major vectors of RatVec.
using RatMat = std::vector<RatVec>;

int rank(RatMat a);

/// Solves the square system a*x = b. nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

/// Unique solution of a (possibly overdetermined) consistent system of rank n.
/// nullopt when the rank is deficient or the system is inconsistent.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

/// Basis of {x : a*x = 0} over the rationals, one primitive integer vector
/// per free variable.
std::vector<LatVec> rational_nullspace_primitive(RatMat a);

/// Basis (as columns, returned row-major n x k) of the saturated lattice
/// {x in Z^n : rows * x = 0}.
IntMat integer_kernel_basis(const IntMat& rows, int n);

/// Given an n x k matrix whose columns form a basis of a saturated sublattice,
/// returns an n x n unimodular matrix whose first k columns span the same
/// lattice.
IntMat extend_to_unimodular(const IntMat& basis_cols);

}  // namespace probelab
