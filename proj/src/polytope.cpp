#include "probelab/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "probelab/intlinalg.hpp"
#include "probelab/lp.hpp"

namespace probelab {

namespace {

HalfSpace normalize(const HalfSpace& h) {
  auto [eta, g] = make_primitive(h.eta);
  return {eta, h.kappa / Rat(g)};
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs);
}

bool lp_feasible(const std::vector<HalfSpace>& hs, int n) {
  LpProblem p;
  p.num_vars = n;
  p.objective.assign(n, Rat(0));
  for (const auto& h : hs) p.leq.push_back({to_rat(h.eta), h.kappa});
  return exact_lp_max(p).status == LpStatus::kOptimal;
}

// Nontrivial recession direction detection: the cone {d : <eta_i,d> <= 0}
// meets the box [-1,1]^n in a point with some |d_j| > 0 iff it is not {0}.
bool has_recession_direction(const std::vector<HalfSpace>& hs, int n) {
  for (int j = 0; j < n; ++j) {
    for (int sign = 0; sign < 2; ++sign) {
      LpProblem p;
      p.num_vars = n;
      p.objective.assign(n, Rat(0));
      p.objective[j] = sign ? -1 : 1;
      for (const auto& h : hs) p.leq.push_back({to_rat(h.eta), Rat(0)});
      for (int k = 0; k < n; ++k) {
        RatVec row(n, Rat(0));
        row[k] = 1;
        p.leq.push_back({row, Rat(1)});
      }
      p.lower_bounds = RatVec(n, Rat(-1));
      auto sol = exact_lp_max(p);
      if (sol.status == LpStatus::kOptimal && sol.value > 0) return true;
    }
  }
  return false;
}

}  // namespace

Polytope Polytope::from_halfspaces(int dim, std::vector<HalfSpace> input) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (input.empty()) throw std::invalid_argument("no halfspaces");

  Polytope p;
  p.dim_ = dim;

  std::vector<HalfSpace> hs;
  for (auto& h : input) {
    if (static_cast<int>(h.eta.size()) != dim)
      throw std::invalid_argument("normal has wrong dimension");
    HalfSpace nh = normalize(h);
    bool dup = false;
    for (const auto& seen : hs)
      if (seen.eta == nh.eta && seen.kappa == nh.kappa) {
        dup = true;
        break;
      }
    if (dup)
      p.dropped_.push_back(nh);
    else
      hs.push_back(nh);
  }

  if (!lp_feasible(hs, dim)) throw std::invalid_argument("degenerate");
  if (has_recession_direction(hs, dim)) throw std::invalid_argument("unbounded");

  // All n-subsets of boundary hyperplanes, solved exactly.
  const int nf = static_cast<int>(hs.size());
  std::set<RatVec> vset;
  std::vector<int> idx(dim);
  auto try_subset = [&](const std::vector<int>& sel) {
    RatMat a;
    RatVec b;
    for (int i : sel) {
      a.push_back(to_rat(hs[i].eta));
      b.push_back(hs[i].kappa);
    }
    auto x = solve_square(a, b);
    if (!x) return;
    for (const auto& h : hs)
      if (probelab::ell(h, *x) < 0) return;
    vset.insert(*x);
  };
  std::vector<int> comb;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(comb.size()) == dim) {
      try_subset(comb);
      return;
    }
    for (int i = start; i < nf; ++i) {
      comb.push_back(i);
      self(self, i + 1);
      comb.pop_back();
    }
  };
  rec(rec, 0);

  p.vertices_.assign(vset.begin(), vset.end());
  if (affine_rank(p.vertices_) != dim) throw std::invalid_argument("degenerate");

  // A halfspace supports a facet iff its vertex set has affine dimension n-1.
  std::vector<HalfSpace> kept;
  for (const auto& h : hs) {
    std::vector<RatVec> on;
    for (const auto& v : p.vertices_)
      if (probelab::ell(h, v) == 0) on.push_back(v);
    if (!on.empty() && affine_rank(on) == dim - 1)
      kept.push_back(h);
    else
      p.dropped_.push_back(h);
  }
  p.halfspaces_ = std::move(kept);

  p.incidence_.resize(p.vertices_.size());
  for (size_t v = 0; v < p.vertices_.size(); ++v)
    for (int i = 0; i < p.num_facets(); ++i)
      if (p.ell(i, p.vertices_[v]) == 0) p.incidence_[v].push_back(i);

  p.build_face_lattice();
  return p;
}

Rat Polytope::ell(int facet_id, const RatVec& u) const {
  if (facet_id < 0 || facet_id >= num_facets())
    throw std::invalid_argument("invalid facet id");
  return probelab::ell(halfspaces_[facet_id], u);
}

bool Polytope::contains(const RatVec& u) const {
  for (const auto& h : halfspaces_)
    if (probelab::ell(h, u) < 0) return false;
  return true;
}

bool Polytope::strictly_contains(const RatVec& u) const {
  for (const auto& h : halfspaces_)
    if (probelab::ell(h, u) <= 0) return false;
  return true;
}

void Polytope::build_face_lattice() {
  const size_t nv = vertices_.size();
  std::map<std::vector<int>, std::vector<int>> by_canonical;  // I -> vertex ids
  for (size_t v = 0; v < nv; ++v) {
    const auto& inc = incidence_[v];
    const size_t k = inc.size();
    for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
      std::vector<int> s;
      for (size_t b = 0; b < k; ++b)
        if (mask & (size_t{1} << b)) s.push_back(inc[b]);
      std::vector<int> members;
      for (size_t w = 0; w < nv; ++w)
        if (std::includes(incidence_[w].begin(), incidence_[w].end(),
                          s.begin(), s.end()))
          members.push_back(static_cast<int>(w));
      std::vector<int> canonical = incidence_[members[0]];
      for (size_t m = 1; m < members.size(); ++m) {
        std::vector<int> tmp;
        std::set_intersection(canonical.begin(), canonical.end(),
                              incidence_[members[m]].begin(),
                              incidence_[members[m]].end(),
                              std::back_inserter(tmp));
        canonical = std::move(tmp);
      }
      by_canonical.emplace(std::move(canonical), std::move(members));
    }
  }
  for (auto& [facets, members] : by_canonical) {
    if (facets.empty()) continue;  // would be the whole polytope
    std::vector<RatVec> pts;
    for (int v : members) pts.push_back(vertices_[v]);
    faces_.push_back({facets, affine_rank(pts), members});
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.facet_ids) < std::tie(b.dim, b.facet_ids);
  });
  for (size_t i = 0; i < faces_.size(); ++i)
    face_by_facets_[faces_[i].facet_ids] = static_cast<int>(i);

  for (const auto& f : faces_) {
    if (f.dim != 1) continue;
    int a = f.vertex_ids[0], b = f.vertex_ids[1];
    Int m = 1;
    RatVec d = sub(vertices_[b], vertices_[a]);
    for (const auto& c : d) m = lcm(m, c.get_den());
    LatVec di(d.size());
    for (size_t i = 0; i < d.size(); ++i) di[i] = Rat(d[i] * Rat(m)).get_num();
    edges_.push_back({a, b, make_primitive(di).first,
                      affine_distance(vertices_[a], vertices_[b]), f.facet_ids});
  }
}

int Polytope::face_index(const std::vector<int>& sorted_facet_ids) const {
  auto it = face_by_facets_.find(sorted_facet_ids);
  return it == face_by_facets_.end() ? -1 : it->second;
}

std::vector<LatVec> Polytope::lattice_points() const {
  LatVec lo, hi;
  vertex_box(lo, hi);
  std::vector<LatVec> out;
  LatVec cur(dim_);
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == dim_) {
      RatVec q = to_rat(cur);
      if (contains(q)) out.push_back(cur);
      return;
    }
    for (Int v = lo[coord]; v <= hi[coord]; ++v) {
      cur[coord] = v;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);
  return out;  // lexicographic by construction
}

bool Polytope::is_integral() const {
  for (const auto& v : vertices_)
    if (!to_lat(v)) return false;
  return true;
}

bool Polytope::is_simple() const {
  for (const auto& inc : incidence_)
    if (static_cast<int>(inc.size()) != dim_) return false;
  return true;
}

SmoothResult Polytope::smooth() const {
  if (!is_simple()) return {false, "not simple"};
  for (size_t v = 0; v < vertices_.size(); ++v) {
    IntMat normals;
    for (int i : incidence_[v]) normals.push_back(halfspaces_[i].eta);
    Int d = det(normals);
    if (d != 1 && d != -1)
      return {false, "facet normals at a vertex do not form a lattice basis"};
  }
  return {true, ""};
}

bool Polytope::is_reflexive() const {
  RatVec origin(dim_, Rat(0));
  if (!strictly_contains(origin))
    throw std::invalid_argument("origin not interior");
  if (!is_integral()) return false;
  for (const auto& h : halfspaces_)
    if (h.kappa != 1) return false;
  return true;
}

MonotoneResult Polytope::monotone() const {
  if (!is_simple()) return {false, std::nullopt, "not simple"};
  auto sm = smooth();
  if (!sm.smooth) return {false, std::nullopt, sm.reason};
  if (!is_integral()) return {false, std::nullopt, "not integral"};
  std::optional<LatVec> u0;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    LatVec sum = *to_lat(vertices_[v]);
    for (const auto& d : edge_directions_at(*this, static_cast<int>(v)))
      for (int i = 0; i < dim_; ++i) sum[i] += d[i];
    if (!u0)
      u0 = sum;
    else if (*u0 != sum)
      return {false, std::nullopt, "vertex sums disagree"};
  }
  // The common vertex sum is the unique interior lattice point; asserted.
  int interior = 0;
  bool u0_interior = false;
  for (const auto& z : lattice_points()) {
    if (strictly_contains(to_rat(z))) {
      ++interior;
      if (z == *u0) u0_interior = true;
    }
  }
  if (interior != 1 || !u0_interior)
    return {false, std::nullopt, "interior lattice point not unique"};
  return {true, u0, ""};
}

void Polytope::vertex_box(LatVec& lo, LatVec& hi) const {
  lo.assign(dim_, Int(0));
  hi.assign(dim_, Int(0));
  for (int j = 0; j < dim_; ++j) {
    Rat mn = vertices_[0][j], mx = vertices_[0][j];
    for (const auto& v : vertices_) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = rat_floor(mn);
    hi[j] = rat_ceil(mx);
  }
}

std::vector<LatVec> edge_directions_at(const Polytope& p, int v_id) {
  if (p.dim() == 1) {
    // the only edge is the polytope itself
    const RatVec& v = p.vertices()[v_id];
    const RatVec& w = p.vertices()[1 - v_id];
    Rat d = w[0] - v[0];
    return {LatVec{d > 0 ? Int(1) : Int(-1)}};
  }
  std::vector<LatVec> dirs;
  for (const auto& e : p.edges()) {
    if (e.v0 == v_id)
      dirs.push_back(e.direction);
    else if (e.v1 == v_id)
      dirs.push_back(negate(e.direction));
  }
  return dirs;
}

Int edge_chern_number(const Polytope& p, const Edge& e) {
  auto sm = p.smooth();
  if (!sm.smooth) throw std::invalid_argument("polytope not smooth");
  // Frame at one endpoint: edge directions become the standard basis with the
  // edge along axis 1; the Chern number is 1 minus the sum of the first
  // coordinates of the edge directions at the far endpoint.
  std::vector<LatVec> base = edge_directions_at(p, e.v0);
  std::sort(base.begin(), base.end());
  auto it = std::find(base.begin(), base.end(), e.direction);
  std::rotate(base.begin(), it, it + 1);
  IntMat cols = transpose(base);           // columns = edge directions
  IntMat frame = unimodular_inverse(cols);  // maps them to unit vectors
  Int m1 = 0;
  for (const auto& d : edge_directions_at(p, e.v1)) m1 += mat_apply(frame, d)[0];
  return 1 - m1;
}

Polytope apply_unimodular(const IntMat& t, const LatVec& shift,
                          const Polytope& p) {
  Int d = det(t);
  if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
  IntMat nt = transpose(unimodular_inverse(t));
  std::vector<HalfSpace> hs;
  for (const auto& h : p.halfspaces()) {
    LatVec eta = mat_apply(nt, h.eta);
    hs.push_back({eta, h.kappa + Rat(dot(eta, shift))});
  }
  return Polytope::from_halfspaces(p.dim(), std::move(hs));
}

Polytope translate(const Polytope& p, const LatVec& shift) {
  return apply_unimodular(identity_mat(p.dim()), shift, p);
}

}  // namespace probelab
