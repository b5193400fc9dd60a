#include "probelab/ewald.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "probelab/intlinalg.hpp"

namespace probelab {

namespace {

void require_origin_interior(const Polytope& p) {
  if (!p.strictly_contains(RatVec(p.dim(), Rat(0))))
    throw std::invalid_argument("origin not interior");
}

// Lexicographically first n-subset with determinant +-1, with rank pruning.
BasisSearch first_unimodular_subset(const std::vector<LatVec>& pts, int n) {
  BasisSearch result;
  if (static_cast<int>(pts.size()) < n) return result;
  std::vector<int> sel;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(sel.size()) == n) {
      IntMat m;
      for (int i : sel) m.push_back(pts[i]);
      Int d = det(m);
      return d == 1 || d == -1;
    }
    for (int i = start; i < static_cast<int>(pts.size()); ++i) {
      sel.push_back(i);
      RatMat rows;
      for (int j : sel) rows.push_back(to_rat(pts[j]));
      if (rank(rows) == static_cast<int>(sel.size()) && self(self, i + 1))
        return true;
      sel.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) {
    result.found = true;
    for (int i : sel) result.basis.push_back(pts[i]);
  }
  return result;
}

}  // namespace

SymmetricSet symmetric_points(const Polytope& p) {
  require_origin_interior(p);
  SymmetricSet s;
  for (const auto& z : p.lattice_points()) {
    if (is_zero(z)) continue;
    if (p.contains(to_rat(negate(z)))) s.points.push_back(z);
  }
  return s;  // lattice_points is sorted
}

BasisSearch weak_ewald(const Polytope& p) {
  return first_unimodular_subset(symmetric_points(p).points, p.dim());
}

std::vector<bool> strong_ewald(const Polytope& p) {
  auto s = symmetric_points(p);
  std::vector<bool> out(p.num_facets());
  for (int f = 0; f < p.num_facets(); ++f) {
    std::vector<LatVec> on;
    for (const auto& v : s.points)
      if (p.ell(f, to_rat(v)) == 0) on.push_back(v);
    out[f] = first_unimodular_subset(on, p.dim()).found;
  }
  return out;
}

StarMembership star_membership(const Polytope& p, const Face& f,
                               const LatVec& v) {
  StarMembership m;
  int zero_count = 0;
  RatVec q = to_rat(v);
  for (int i : f.facet_ids)
    if (p.ell(i, q) == 0) ++zero_count;
  m.in_star_capital = zero_count >= 1;
  m.in_star_lower = zero_count >= 2;
  m.in_star_star = m.in_star_capital && !m.in_star_lower;
  return m;
}

StarReport star_ewald(const Polytope& p) {
  require_origin_interior(p);
  auto s = symmetric_points(p);
  StarReport report;
  report.all_satisfied = true;
  for (size_t fi = 0; fi < p.faces().size(); ++fi) {
    const Face& f = p.faces()[fi];
    StarVerdict verdict;
    verdict.face_index = static_cast<int>(fi);
    verdict.face = f;
    for (const auto& lambda : s.points) {
      if (!star_membership(p, f, lambda).in_star_star) continue;
      if (star_membership(p, f, negate(lambda)).in_star_capital) continue;
      verdict.satisfied = true;
      verdict.witness = lambda;  // lexicographically least, points are sorted
      break;
    }
    if (!verdict.satisfied) report.all_satisfied = false;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

std::string format_star_report(const StarReport& report) {
  std::ostringstream os;
  for (const auto& v : report.verdicts) {
    os << "face={";
    for (size_t i = 0; i < v.face.facet_ids.size(); ++i) {
      if (i) os << ",";
      os << v.face.facet_ids[i];
    }
    os << "} dim=" << v.face.dim << " satisfied=" << (v.satisfied ? 1 : 0)
       << " witness=" << (v.witness ? to_string(*v.witness) : "none") << "\n";
  }
  return os.str();
}

DisplaceReport synthesize_displacement(const Polytope& p, const RatVec& u) {
  return synthesize_displacement(p, u, star_ewald(p));
}

DisplaceReport synthesize_displacement(const Polytope& p, const RatVec& u,
                                       const StarReport& report) {
  const int n = p.dim();
  RatVec origin(n, Rat(0));
  if (u == origin) throw std::invalid_argument("u0 excluded");
  if (!p.strictly_contains(u)) throw std::invalid_argument("point not interior");

  // Exit point of the ray from the origin through u; its canonical face is
  // the piece of the cone decomposition that contains u.
  Rat speed = 0;
  for (const auto& h : p.halfspaces()) {
    Rat s = dot(h.eta, u) / h.kappa;
    if (s > speed) speed = s;
  }
  RatVec y = scale(1 / speed, u);
  std::vector<int> on;
  for (int i = 0; i < p.num_facets(); ++i)
    if (p.ell(i, y) == 0) on.push_back(i);
  int fi = p.face_index(on);
  if (fi < 0) throw std::logic_error("exit face not in the face lattice");

  const StarVerdict& verdict = report.verdicts.at(fi);
  if (!verdict.satisfied)
    throw std::runtime_error("not star Ewald: face={" + [&] {
      std::string s2;
      for (size_t i = 0; i < verdict.face.facet_ids.size(); ++i)
        s2 += (i ? "," : "") + std::to_string(verdict.face.facet_ids[i]);
      return s2;
    }() + "}");

  const LatVec& witness = *verdict.witness;
  int entry = -1;
  for (int i : verdict.face.facet_ids)
    if (p.ell(i, to_rat(witness)) == 0) {
      entry = i;
      break;
    }
  if (entry < 0) throw std::logic_error("star witness misses its facet");

  LatVec lambda = negate(witness);
  auto probe = probe_through(p, u, entry, lambda);
  DisplaceReport out;
  out.point = u;
  out.direction_bound = default_direction_bound(p);
  out.searched_directions = 1;
  if (probe && displaces(*probe, u)) {
    out.displaced = true;
    out.position = p.ell(entry, u);
    out.witness = std::move(*probe);
  }
  return out;
}

RatVec special_point_s(const Polytope& p, int vertex_id, int facet_id) {
  if (!p.is_simple()) throw std::invalid_argument("polytope not simple");
  const auto& inc = p.incidence().at(vertex_id);
  if (std::find(inc.begin(), inc.end(), facet_id) == inc.end())
    throw std::invalid_argument("vertex not on facet");
  RatVec s = p.vertices()[vertex_id];
  for (const auto& e : p.edges()) {
    bool from_v = e.v0 == vertex_id, to_v = e.v1 == vertex_id;
    if (!from_v && !to_v) continue;
    if (std::find(e.facet_ids.begin(), e.facet_ids.end(), facet_id) ==
        e.facet_ids.end())
      continue;
    const LatVec dir = from_v ? e.direction : negate(e.direction);
    for (int i = 0; i < p.dim(); ++i) s[i] += Rat(dir[i]);
  }
  return s;
}

std::vector<int> small_facets(const Polytope& p) {
  if (p.dim() != 3) throw std::invalid_argument("small facets need dimension 3");
  std::vector<int> out;
  for (int f = 0; f < p.num_facets(); ++f) {
    std::vector<int> fv;
    for (size_t v = 0; v < p.vertices().size(); ++v)
      if (p.ell(f, p.vertices()[v]) == 0) fv.push_back(static_cast<int>(v));
    if (fv.size() != 3) continue;
    bool unit = true;
    for (const auto& e : p.edges()) {
      bool in_facet = std::find(e.facet_ids.begin(), e.facet_ids.end(), f) !=
                      e.facet_ids.end();
      if (in_facet && e.length != 1) unit = false;
    }
    if (!unit) continue;
    // Unimodularity inside the facet plane.
    auto va = p.vertices()[fv[0]];
    auto e1 = to_lat(sub(p.vertices()[fv[1]], va));
    auto e2 = to_lat(sub(p.vertices()[fv[2]], va));
    if (!e1 || !e2) continue;
    IntMat rows{p.facet(f).eta};
    IntMat kernel = integer_kernel_basis(rows, 3);  // 3 x 2, plane lattice
    // Express the edges in the plane-lattice basis and take the determinant.
    RatMat a = {to_rat(LatVec{kernel[0][0], kernel[0][1]}),
                to_rat(LatVec{kernel[1][0], kernel[1][1]}),
                to_rat(LatVec{kernel[2][0], kernel[2][1]})};
    auto c1 = solve_unique(a, to_rat(*e1));
    auto c2 = solve_unique(a, to_rat(*e2));
    if (!c1 || !c2) continue;
    Rat d = (*c1)[0] * (*c2)[1] - (*c1)[1] * (*c2)[0];
    if (d == 1 || d == -1) out.push_back(f);
  }
  return out;
}

}  // namespace probelab
