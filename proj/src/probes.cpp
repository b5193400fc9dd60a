#include "probelab/probes.hpp"

#include <algorithm>
#include <stdexcept>

namespace probelab {

std::optional<Probe> probe_through(const Polytope& p, const RatVec& u,
                                   int facet_id, const LatVec& lambda) {
  if (!p.strictly_contains(u)) throw std::invalid_argument("point not interior");
  const HalfSpace& f = p.facet(facet_id);
  if (dot(lambda, f.eta) != -1) return std::nullopt;

  Rat back = p.ell(facet_id, u);  // ray parameter from the facet plane to u
  RatVec entry = axpy(u, -back, lambda);
  for (int j = 0; j < p.num_facets(); ++j) {
    if (j == facet_id) continue;
    if (p.ell(j, entry) <= 0) return std::nullopt;  // outside or on a wall
  }

  std::optional<Rat> forward;
  for (int j = 0; j < p.num_facets(); ++j) {
    auto d = directed_distance(u, p.facet(j), lambda);
    if (d && (!forward || *d < *forward)) forward = d;
  }
  if (!forward) return std::nullopt;  // cannot happen for bounded polytopes

  Probe probe;
  probe.facet_id = facet_id;
  probe.direction = lambda;
  probe.entry = entry;
  probe.exit = axpy(u, *forward, lambda);
  probe.length = back + *forward;
  return probe;
}

bool displaces(const Probe& probe, const RatVec& u) {
  // Recover the ray parameter and check u really sits on the open segment.
  std::optional<Rat> t;
  for (size_t i = 0; i < u.size(); ++i) {
    Rat delta = u[i] - probe.entry[i];
    if (probe.direction[i] == 0) {
      if (delta != 0) throw std::invalid_argument("point not on probe");
    } else {
      Rat ti = delta / Rat(probe.direction[i]);
      if (t && *t != ti) throw std::invalid_argument("point not on probe");
      t = ti;
    }
  }
  if (!t || *t <= 0 || *t >= probe.length)
    throw std::invalid_argument("point not on probe");
  return *t * 2 < probe.length;
}

std::vector<LatVec> candidate_directions(int dim, long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  std::vector<LatVec> out;
  LatVec cur(dim);
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == dim) {
      if (!is_zero(cur) && is_primitive(cur)) out.push_back(cur);
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      cur[coord] = v;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);
  return out;  // lexicographic by construction
}

long default_direction_bound(const Polytope& p) {
  Rat m = 0;
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (abs(c) > m) m = abs(c);
  return rat_ceil(m).get_si() + 2;
}

DisplaceReport find_displacing_probe(const Polytope& p, const RatVec& u,
                                     long bound) {
  return find_displacing_probe(p, u, candidate_directions(p.dim(), bound),
                               bound);
}

DisplaceReport find_displacing_probe(const Polytope& p, const RatVec& u,
                                     const std::vector<LatVec>& directions,
                                     long bound_label) {
  if (!p.strictly_contains(u)) throw std::invalid_argument("point not interior");
  std::vector<LatVec> dirs = directions;
  std::sort(dirs.begin(), dirs.end());
  DisplaceReport report;
  report.point = u;
  report.searched_directions = static_cast<long>(dirs.size());
  report.direction_bound = bound_label;
  for (int f = 0; f < p.num_facets(); ++f) {
    for (const auto& lambda : dirs) {
      if (dot(lambda, p.facet(f).eta) != -1) continue;
      auto probe = probe_through(p, u, f, lambda);
      if (!probe) continue;
      Rat position = p.ell(f, u);
      if (position * 2 < probe->length) {
        report.displaced = true;
        report.witness = std::move(*probe);
        report.position = position;
        return report;
      }
    }
  }
  return report;
}

bool is_inessential_probe(const Polytope& p, const Probe& probe) {
  std::vector<int> exit_facets;
  for (int j = 0; j < p.num_facets(); ++j)
    if (p.ell(j, probe.exit) == 0) exit_facets.push_back(j);
  if (exit_facets.size() != 1) return false;
  for (int j = 0; j < p.num_facets(); ++j) {
    if (j == probe.facet_id || j == exit_facets[0]) continue;
    if (dot(probe.direction, p.facet(j).eta) != 0) return false;
  }
  return true;
}

}  // namespace probelab
