#include "probelab/bundles.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "probelab/ewald.hpp"
#include "probelab/intlinalg.hpp"
#include "probelab/maximin.hpp"

namespace probelab {

RatVec Splitting::embed(const RatVec& xhat, const RatVec& y) const {
  size_t n = base_basis.size();
  RatVec out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < xhat.size(); ++j)
      out[i] += Rat(base_basis[i][j]) * xhat[j];
    for (size_t j = 0; j < y.size(); ++j) out[i] += Rat(fiber_comp[i][j]) * y[j];
  }
  return out;
}

namespace {

// Coefficients of a halfspace in split coordinates: (K^T eta) on the base
// block, (W^T eta) on the fiber block.
void split_row(const Splitting& s, const LatVec& eta, LatVec& base_part,
               LatVec& fiber_part) {
  int k = s.base_basis.empty() ? 0 : static_cast<int>(s.base_basis[0].size());
  int m = s.fiber_comp.empty() ? 0 : static_cast<int>(s.fiber_comp[0].size());
  base_part.assign(k, Int(0));
  fiber_part.assign(m, Int(0));
  for (size_t i = 0; i < eta.size(); ++i) {
    for (int j = 0; j < k; ++j) base_part[j] += s.base_basis[i][j] * eta[i];
    for (int j = 0; j < m; ++j) fiber_part[j] += s.fiber_comp[i][j] * eta[i];
  }
}

}  // namespace

BundleSpec verify_bundle(const Polytope& p,
                         const std::vector<int>& fiber_facet_ids) {
  const int n = p.dim();
  std::set<int> fiber_set(fiber_facet_ids.begin(), fiber_facet_ids.end());
  if (fiber_set.empty() || static_cast<int>(fiber_set.size()) == p.num_facets())
    throw std::runtime_error("bundle partition is trivial");
  for (int i : fiber_set)
    if (i < 0 || i >= p.num_facets())
      throw std::runtime_error("bundle partition has an invalid facet id");

  std::vector<int> base_ids;
  for (int i = 0; i < p.num_facets(); ++i)
    if (!fiber_set.count(i)) base_ids.push_back(i);

  IntMat fiber_normals;
  for (int i : fiber_facet_ids) fiber_normals.push_back(p.facet(i).eta);
  IntMat kernel = integer_kernel_basis(fiber_normals, n);
  const int k = kernel.empty() ? 0 : static_cast<int>(kernel[0].size());
  const int m = n - k;
  if (k == 0) throw std::runtime_error("fiber normals span the whole space");
  if (m == 0) throw std::runtime_error("fiber normals span nothing");

  IntMat full = extend_to_unimodular(kernel);
  Splitting split;
  split.base_basis.assign(n, LatVec(k));
  split.fiber_comp.assign(n, LatVec(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) split.base_basis[i][j] = full[i][j];
    for (int j = 0; j < m; ++j) split.fiber_comp[i][j] = full[i][j + k];
  }

  // Fiber polytope from the fiber rows, which see only the fiber block.
  std::vector<HalfSpace> fiber_rows;
  for (int i : fiber_facet_ids) {
    LatVec bp, fp;
    split_row(split, p.facet(i).eta, bp, fp);
    if (!is_zero(bp))
      throw std::logic_error("fiber normal escaped the fiber block");
    fiber_rows.push_back({fp, p.facet(i).kappa});
  }
  Polytope fiber = [&] {
    try {
      return Polytope::from_halfspaces(m, fiber_rows);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("fiber polytope invalid: ") +
                               e.what());
    }
  }();
  if (!fiber.dropped_halfspaces().empty())
    throw std::runtime_error("a fiber facet is redundant in the fiber");
  // Base facets must keep a nonzero base component.
  for (int i : base_ids) {
    LatVec bp, fp;
    split_row(split, p.facet(i).eta, bp, fp);
    if (is_zero(bp))
      throw std::runtime_error("a base facet is parallel to the fiber block");
  }

  // Base = the slice through the fiber's central point.
  RatVec fiber_center = central_point(fiber).v0;
  Polytope base = slice(p, split, fiber_center, fiber);
  if (base.num_facets() != static_cast<int>(base_ids.size()))
    throw std::runtime_error("a base facet is redundant in the central slice");

  // Vertex-facet incidence must match the product's.
  // Slice facets appear in base_ids order; fiber facets in fiber_facet_ids
  // order. Identify vertices by their incidence sets in those numberings.
  std::map<std::vector<int>, int> base_vertex_by_inc, fiber_vertex_by_inc;
  for (size_t v = 0; v < base.vertices().size(); ++v) {
    std::vector<int> inc;
    for (int i : base.incidence()[v]) inc.push_back(base_ids[i]);
    std::sort(inc.begin(), inc.end());
    base_vertex_by_inc[inc] = static_cast<int>(v);
  }
  for (size_t v = 0; v < fiber.vertices().size(); ++v) {
    std::vector<int> inc;
    for (int i : fiber.incidence()[v]) inc.push_back(fiber_facet_ids[i]);
    std::sort(inc.begin(), inc.end());
    fiber_vertex_by_inc[inc] = static_cast<int>(v);
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& inc : p.incidence()) {
    std::vector<int> alpha, beta;
    for (int i : inc)
      (fiber_set.count(i) ? beta : alpha).push_back(i);
    auto ai = base_vertex_by_inc.find(alpha);
    auto bi = fiber_vertex_by_inc.find(beta);
    if (ai == base_vertex_by_inc.end() || bi == fiber_vertex_by_inc.end())
      throw std::runtime_error(
          "vertex incidence does not factor through the partition");
    if (!pairs.insert({ai->second, bi->second}).second)
      throw std::runtime_error("two vertices project to the same product pair");
  }
  if (pairs.size() != base.vertices().size() * fiber.vertices().size())
    throw std::runtime_error("vertex count differs from the product's");

  if (p.monotone().monotone && !fiber.monotone().monotone)
    throw std::runtime_error("fiber of a monotone bundle is not monotone");

  BundleSpec spec;
  spec.base = std::move(base);
  spec.fiber = std::move(fiber);
  spec.fiber_facet_ids = fiber_facet_ids;
  spec.base_facet_ids = base_ids;
  spec.splitting = split;
  return spec;
}

Polytope build_delta1_bundle(const Polytope& base, const std::vector<Int>& b) {
  auto mono = base.monotone();
  if (!mono.monotone || *mono.u0 != LatVec(base.dim(), Int(0)))
    throw std::invalid_argument(
        "base must be monotone with its central lattice point at the origin");
  if (b.size() != static_cast<size_t>(base.num_facets()))
    throw std::invalid_argument("one twist integer per base facet required");

  const int n = base.dim() + 1;
  std::vector<HalfSpace> rows;
  for (int i = 0; i < base.num_facets(); ++i) {
    LatVec eta = base.facet(i).eta;
    eta.push_back(b[i]);
    rows.push_back({eta, Rat(1)});
  }
  LatVec up(n, Int(0)), down(n, Int(0));
  up[n - 1] = 1;
  down[n - 1] = -1;
  rows.push_back({up, Rat(1)});
  rows.push_back({down, Rat(1)});

  auto fail = [&](const std::string& why) -> std::runtime_error {
    // Report which edge inequalities L(e) >= |b_i - b_l| + 1 are violated.
    std::ostringstream os;
    os << "not a bundle (combinatorics broke): " << why;
    for (const auto& e : base.edges()) {
      auto transverse_at = [&](int v) -> int {
        for (int i : base.incidence()[v])
          if (std::find(e.facet_ids.begin(), e.facet_ids.end(), i) ==
              e.facet_ids.end())
            return i;
        return -1;
      };
      int i = transverse_at(e.v0), l = transverse_at(e.v1);
      if (i < 0 || l < 0) continue;
      Rat need = Rat(abs(b[i] - b[l])) + 1;
      if (e.length < need)
        os << "; edge {" << e.v0 << "," << e.v1 << "} has length "
           << to_string(e.length) << " < |b_" << i << " - b_" << l << "| + 1 = "
           << to_string(need);
    }
    return std::runtime_error(os.str());
  };

  Polytope total = [&] {
    try {
      return Polytope::from_halfspaces(n, rows);
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }();
  try {
    verify_bundle(total,
                  {base.num_facets(), base.num_facets() + 1});
  } catch (const std::exception& e) {
    throw fail(e.what());
  }
  return total;
}

Polytope build_simplex_bundle(int k, int alpha) {
  if (k < 1) throw std::invalid_argument("simplex dimension must be positive");
  if (alpha < 0 || alpha > k)
    throw std::invalid_argument("twist must satisfy 0 <= alpha <= k");
  std::vector<HalfSpace> rows;
  for (int i = 0; i < k; ++i) {
    LatVec eta(k, Int(0));
    eta[i] = -1;
    rows.push_back({eta, Rat(1)});
  }
  rows.push_back({LatVec(k, Int(1)), Rat(1)});
  Polytope simplex = Polytope::from_halfspaces(k, rows);
  std::vector<Int> b(k + 1, Int(0));
  b[k] = -alpha;  // sum x_i <= 1 + alpha*y
  return build_delta1_bundle(simplex, b);
}

Polytope slice(const Polytope& p, const Splitting& s, const RatVec& y,
               const Polytope& fiber) {
  if (!fiber.contains(y)) throw std::invalid_argument("y outside fiber");
  int k = s.base_basis.empty() ? 0 : static_cast<int>(s.base_basis[0].size());
  std::vector<HalfSpace> rows;
  for (const auto& h : p.halfspaces()) {
    LatVec bp, fp;
    split_row(s, h.eta, bp, fp);
    Rat rhs = h.kappa - dot(fp, y);
    if (is_zero(bp)) {
      if (rhs < 0) throw std::invalid_argument("y outside fiber");
      continue;
    }
    rows.push_back({bp, rhs});
  }
  return Polytope::from_halfspaces(k, rows);
}

Polytope slab(const Polytope& p, const Splitting& s, const LatVec& w,
              const Polytope& fiber) {
  auto sym = symmetric_points(fiber);
  if (std::find(sym.points.begin(), sym.points.end(), w) == sym.points.end())
    throw std::invalid_argument("w not a symmetric fiber point");
  int k = s.base_basis.empty() ? 0 : static_cast<int>(s.base_basis[0].size());
  std::vector<HalfSpace> rows;
  for (const auto& h : p.halfspaces()) {
    LatVec bp, fp;
    split_row(s, h.eta, bp, fp);
    bp.push_back(dot(fp, w));  // coefficient of the segment coordinate
    if (is_zero(bp)) continue;
    rows.push_back({bp, h.kappa});
  }
  LatVec up(k + 1, Int(0)), down(k + 1, Int(0));
  up[k] = 1;
  down[k] = -1;
  rows.push_back({up, Rat(1)});
  rows.push_back({down, Rat(1)});
  return Polytope::from_halfspaces(k + 1, rows);
}

Polytope product(const Polytope& a, const Polytope& b) {
  int n = a.dim() + b.dim();
  std::vector<HalfSpace> rows;
  for (const auto& h : a.halfspaces()) {
    LatVec eta = h.eta;
    eta.resize(n, Int(0));
    rows.push_back({eta, h.kappa});
  }
  for (const auto& h : b.halfspaces()) {
    LatVec eta(a.dim(), Int(0));
    for (const auto& c : h.eta) eta.push_back(c);
    rows.push_back({eta, h.kappa});
  }
  return Polytope::from_halfspaces(n, rows);
}

}  // namespace probelab
