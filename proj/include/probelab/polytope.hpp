#pragma once

#include <map>
#include <string>
#include <vector>

#include "probelab/exact.hpp"

namespace probelab {

/// Proper face in canonical form: facet_ids is the set of *all* facets
/// containing the face.
struct Face {
  std::vector<int> facet_ids;   // sorted
  int dim = 0;
  std::vector<int> vertex_ids;  // sorted
};

struct Edge {
  int v0 = 0, v1 = 0;   // vertex ids, v0 < v1
  LatVec direction;     // primitive, from v0 towards v1
  Rat length;           // affine length
  std::vector<int> facet_ids;
};

struct MonotoneResult {
  bool monotone = false;
  std::optional<LatVec> u0;
  std::string reason;
};

struct SmoothResult {
  bool smooth = false;
  std::string reason;
};

/// Bounded full-dimensional H-representation polytope with exact vertex set,
/// vertex-facet incidence and face lattice, all computed eagerly. Immutable.
class Polytope {
 public:
  /// Normalizes normals to primitive (rescaling support constants), enumerates
  /// vertices exactly, drops redundant halfspaces (recorded), verifies
  /// boundedness and full dimension.
  /// Throws std::invalid_argument("unbounded") / ("degenerate").
  static Polytope from_halfspaces(int dim, std::vector<HalfSpace> halfspaces);

  int dim() const { return dim_; }
  int num_facets() const { return static_cast<int>(halfspaces_.size()); }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const HalfSpace& facet(int i) const { return halfspaces_.at(i); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }
  const std::vector<HalfSpace>& dropped_halfspaces() const { return dropped_; }

  Rat ell(int facet_id, const RatVec& u) const;
  bool contains(const RatVec& u) const;
  bool strictly_contains(const RatVec& u) const;

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Index into faces() for a canonical facet set; -1 if absent.
  int face_index(const std::vector<int>& sorted_facet_ids) const;

  /// Integer points, sorted lexicographically.
  std::vector<LatVec> lattice_points() const;

  bool is_integral() const;
  bool is_simple() const;
  SmoothResult smooth() const;
  bool is_smooth() const { return smooth().smooth; }
  /// Requires 0 in the interior; throws "origin not interior" otherwise.
  bool is_reflexive() const;
  MonotoneResult monotone() const;

  /// Exact integer bounding box of the vertex set.
  void vertex_box(LatVec& lo, LatVec& hi) const;

 private:
  int dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RatVec> vertices_;               // sorted lexicographically
  std::vector<std::vector<int>> incidence_;    // facet ids per vertex, sorted
  std::vector<Face> faces_;                    // sorted by (dim, facet_ids)
  std::vector<Edge> edges_;
  std::vector<HalfSpace> dropped_;
  std::map<std::vector<int>, int> face_by_facets_;

  void build_face_lattice();
};

/// Primitive edge directions leaving vertex `v_id`.
std::vector<LatVec> edge_directions_at(const Polytope& p, int v_id);

/// First Chern number of the sphere over an edge of a smooth polytope,
/// computed in the edge-adapted unimodular frame.
Int edge_chern_number(const Polytope& p, const Edge& e);

/// Image polytope under x -> Tx + shift, |det T| = 1. Normals map by the
/// inverse transpose with supports adjusted; facet ids are preserved.
Polytope apply_unimodular(const IntMat& t, const LatVec& shift,
                          const Polytope& p);

Polytope translate(const Polytope& p, const LatVec& shift);

}  // namespace probelab
