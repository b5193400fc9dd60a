#include "probelab/polygon.hpp"

#include <algorithm>
#include <stdexcept>

#include "probelab/lp.hpp"

namespace probelab {

namespace {

void require_smooth_polygon(const Polytope& p) {
  if (p.dim() != 2) throw std::invalid_argument("polygon required");
  auto sm = p.smooth();
  if (!sm.smooth)
    throw std::invalid_argument("smooth polygon required: " + sm.reason);
}

// Counterclockwise comparison of nonzero integer vectors by angle from the
// positive x-axis.
bool ccw_less(const LatVec& a, const LatVec& b) {
  auto half = [](const LatVec& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  if (half(a) != half(b)) return half(a) < half(b);
  Int cross = a[0] * b[1] - a[1] * b[0];
  if (cross != 0) return cross > 0;
  return false;
}

}  // namespace

std::vector<int> polygon_edge_cycle(const Polytope& p) {
  if (p.dim() != 2) throw std::invalid_argument("polygon required");
  std::vector<int> order(p.edges().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ccw_less(p.facet(p.edges()[a].facet_ids[0]).eta,
                    p.facet(p.edges()[b].facet_ids[0]).eta);
  });
  return order;
}

Int edge_self_intersection(const Polytope& p, int edge_index) {
  require_smooth_polygon(p);
  auto cycle = polygon_edge_cycle(p);
  auto pos = std::find(cycle.begin(), cycle.end(), edge_index);
  if (pos == cycle.end()) throw std::invalid_argument("invalid edge index");
  size_t i = static_cast<size_t>(pos - cycle.begin());
  size_t nedges = cycle.size();
  // Outward normals in ccw order: the predecessor is the left neighbor once
  // the edge's normal is rotated to (0,-1).
  const LatVec& eta_e = p.facet(p.edges()[edge_index].facet_ids[0]).eta;
  const LatVec& eta_left =
      p.facet(p.edges()[cycle[(i + nedges - 1) % nedges]].facet_ids[0]).eta;
  const LatVec& eta_right =
      p.facet(p.edges()[cycle[(i + 1) % nedges]].facet_ids[0]).eta;
  // N maps eta_left -> (-1,0) and eta_e -> (0,-1).
  IntMat a = {{eta_left[0], eta_e[0]}, {eta_left[1], eta_e[1]}};
  IntMat bmat = {{-1, 0}, {0, -1}};
  IntMat nmat = mat_mul(bmat, unimodular_inverse(a));
  LatVec r = mat_apply(nmat, eta_right);
  if (r[0] != 1) throw std::logic_error("conormal normalization failed");
  return r[1];
}

std::vector<EdgeClass> classify_edges(const Polytope& p) {
  require_smooth_polygon(p);
  auto cycle = polygon_edge_cycle(p);
  size_t nedges = cycle.size();
  std::vector<EdgeClass> out(nedges);
  for (size_t i = 0; i < nedges; ++i) {
    int e = cycle[i];
    EdgeClass c;
    c.edge_index = e;
    c.self_intersection = edge_self_intersection(p, e);
    c.length = p.edges()[e].length;
    c.odd = c.self_intersection < 0 && c.self_intersection % 2 != 0;
    out[i] = c;
  }
  for (size_t i = 0; i < nedges; ++i) {
    const EdgeClass& prev = out[(i + nedges - 1) % nedges];
    const EdgeClass& next = out[(i + 1) % nedges];
    out[i].short_edge = out[i].length * 2 <= prev.length &&
                        out[i].length * 2 <= next.length;
    auto ok = [&](const EdgeClass& nb) {
      return nb.odd ? out[i].length < nb.length : out[i].length * 2 <= nb.length;
    };
    out[i].short_enough = ok(prev) && ok(next);
  }
  std::vector<EdgeClass> by_index(nedges);
  for (const auto& c : out) by_index[c.edge_index] = c;
  return by_index;
}

RatVec lemma41_point(const Polytope& p, int edge_index) {
  auto classes = classify_edges(p);
  const EdgeClass& cls = classes.at(edge_index);
  if (!cls.odd || !cls.short_edge)
    throw std::invalid_argument("edge must be short and odd");

  auto cycle = polygon_edge_cycle(p);
  auto pos = std::find(cycle.begin(), cycle.end(), edge_index);
  size_t i = static_cast<size_t>(pos - cycle.begin());
  size_t nedges = cycle.size();
  const LatVec& eta_e = p.facet(p.edges()[edge_index].facet_ids[0]).eta;
  const LatVec& eta_left =
      p.facet(p.edges()[cycle[(i + nedges - 1) % nedges]].facet_ids[0]).eta;
  IntMat a = {{eta_left[0], eta_e[0]}, {eta_left[1], eta_e[1]}};
  IntMat nmat = mat_mul(IntMat{{-1, 0}, {0, -1}}, unimodular_inverse(a));
  // normals transform by nmat, so points transform by its inverse transpose
  IntMat tmap = transpose(unimodular_inverse(nmat));

  // In the rotated frame the edge is horizontal with the polygon above it.
  const Edge& e = p.edges()[edge_index];
  RatVec b0 = mat_apply(tmap, p.vertices()[e.v0]);
  Polytope framed = apply_unimodular(tmap, LatVec{0, 0}, p);

  // Chord at height d above the edge.
  Rat y_level = b0[1] + cls.length;
  LpProblem lp;
  lp.num_vars = 2;
  lp.objective = {Rat(1), Rat(0)};
  for (const auto& h : framed.halfspaces())
    lp.leq.push_back({to_rat(h.eta), h.kappa});
  lp.eq.push_back({{Rat(0), Rat(1)}, y_level});
  LatVec lo, hi;
  framed.vertex_box(lo, hi);
  lp.lower_bounds = to_rat(lo);
  auto mx = exact_lp_max(lp);
  lp.objective = {Rat(-1), Rat(0)};
  auto mn = exact_lp_max(lp);
  if (mx.status != LpStatus::kOptimal || mn.status != LpStatus::kOptimal)
    throw std::logic_error("chord is empty");
  RatVec mid = {(mx.point[0] + mn.point[0]) / 2, y_level};
  return apply_unimodular(transpose(nmat), LatVec(2, Int(0)), mid);
}

AccessibilityClass accessibility_class(const Polytope& p) {
  require_smooth_polygon(p);
  if (p.num_facets() == 3)
    return {Accessibility::kAlwaysAccessible, "triangle"};
  bool has_odd = false;
  for (const auto& c : classify_edges(p))
    if (c.odd) has_odd = true;
  if (p.num_facets() == 4) {
    int parallel_pairs = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p.facet(i).eta == negate(p.facet(j).eta)) ++parallel_pairs;
    if (parallel_pairs == 2)
      return {Accessibility::kAlwaysAccessible, "product of two segments"};
    if (parallel_pairs == 1) {
      if (!has_odd)
        return {Accessibility::kAlwaysAccessible, "trapezoid with no odd edge"};
      return {Accessibility::kNotAlways, "trapezoid with an odd edge"};
    }
    return {Accessibility::kNotAlways, "quadrilateral without parallel facets"};
  }
  return {Accessibility::kNotAlways,
          "blow-up polygon: an exceptional edge can be made short"};
}

Polytope two_point_blowup(const Rat& alpha, const Rat& beta) {
  if (!(0 < alpha && alpha <= beta && alpha + beta < 1))
    throw std::invalid_argument("need 0 < alpha <= beta and alpha + beta < 1");
  std::vector<HalfSpace> rows = {
      {{0, 1}, 1 - alpha},   // F1: y <= 1 - alpha
      {{-1, 0}, Rat(0)},     // F2: x >= 0
      {{0, -1}, Rat(0)},     // F3: y >= 0
      {{1, 0}, 1 - beta},    // F4: x <= 1 - beta
      {{1, 1}, Rat(1)},      // F5: x + y <= 1
  };
  return Polytope::from_halfspaces(2, rows);
}

}  // namespace probelab
