#pragma once

#include "probelab/maximin.hpp"
#include "probelab/polytope.hpp"

namespace probelab {

/// A parsed polytope file: the polytope plus any ghost functionals, which are
/// fed to the maximin cascade only and never stored in the polytope.
struct PolytopeFile {
  Polytope polytope;
  std::vector<AffineFunctional> ghosts;
};

/// Grammar, one entry per line:
///   # comment
///   dim <n>
///   facet <i1> ... <in> <kappa>
///   ghost <i1> ... <in> <kappa>
/// with integer normals (auto-primitivized, kappa rescaled) and rational
/// kappa "p/q". Parse errors carry the 1-based line number.
PolytopeFile parse_polytope_file(const std::string& text);

/// Canonical emission; parse(print(P)) reproduces the polytope and ghosts.
/// Facet comments, when supplied, annotate the corresponding facet lines.
std::string print_polytope_file(
    const Polytope& p, const std::vector<AffineFunctional>& ghosts = {},
    const std::vector<std::string>& facet_comments = {});

/// Built-in example polytopes by name; parametrized names such as
/// "simplex_bundle(2,1)" and "two_point_blowup(1/5,1/2)" are accepted.
/// Unknown names throw std::invalid_argument.
PolytopeFile catalog(const std::string& name);

/// The fixed (non-parametrized) catalog names.
std::vector<std::string> catalog_names();

/// Loads "catalog:NAME" or a file path.
PolytopeFile load_polytope(const std::string& uri);

}  // namespace probelab
