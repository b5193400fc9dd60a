#pragma once

#include "probelab/polytope.hpp"

namespace probelab {

struct EdgeClass {
  int edge_index = -1;
  Int self_intersection;
  Rat length;
  bool odd = false;           // self-intersection odd and negative
  bool short_edge = false;    // at most half the length of both neighbors
  bool short_enough = false;  // shorter than odd neighbors, at most half of even
};

/// Edge indices of a polygon in counterclockwise boundary order.
std::vector<int> polygon_edge_cycle(const Polytope& p);

/// The integer k read from the right-neighbor conormal (1, k) after the
/// unimodular normalization that puts the edge's outward normal at (0,-1)
/// and its left neighbor's at (-1,0).
Int edge_self_intersection(const Polytope& p, int edge_index);

/// Full classification of every edge of a smooth polygon.
std::vector<EdgeClass> classify_edges(const Polytope& p);

/// The distinguished midpoint above a short odd edge: midpoint of the chord
/// parallel to the edge at height equal to the edge's length, in the edge's
/// normalized frame. Throws unless the edge is short and odd.
RatVec lemma41_point(const Polytope& p, int edge_index);

enum class Accessibility { kAlwaysAccessible, kNotAlways };

struct AccessibilityClass {
  Accessibility verdict = Accessibility::kNotAlways;
  std::string reason;
};

/// Shape-based classification of a smooth polygon: triangles, parallelogram
/// products and trapezoids without odd edges stay accessible for every choice
/// of support constants; everything else does not.
AccessibilityClass accessibility_class(const Polytope& p);

/// Two-point blow-up family: {x>=0, y>=0, x+y<=1} with the corners at
/// (0,1) and (1,0) cut at depths alpha and beta. Facet order F1..F5 =
/// (y <= 1-alpha, x >= 0, y >= 0, x <= 1-beta, x+y <= 1).
/// Requires 0 < alpha <= beta and alpha + beta < 1.
Polytope two_point_blowup(const Rat& alpha, const Rat& beta);

}  // namespace probelab
