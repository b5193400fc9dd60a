#include "probelab/maximin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "probelab/intlinalg.hpp"

namespace probelab {

namespace {

RatVec functional_row(const AffineFunctional& f) { return to_rat(f.eta); }

// dim of {x : leq, eq} = n - rank(explicit + implicit equalities).
// An inequality a.x <= b is an implicit equality iff min a.x over the region
// equals b, decided by one exact LP per row.
int region_dim(const RegionSnapshot& region, int n, const RatVec& box_lo,
               RatMat* equality_rows_out = nullptr, RatVec* rhs_out = nullptr) {
  RatMat eqs;
  RatVec rhs;
  for (const auto& c : region.eq) {
    eqs.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (const auto& c : region.leq) {
    LpProblem lp;
    lp.num_vars = n;
    lp.objective.resize(n);
    for (int j = 0; j < n; ++j) lp.objective[j] = -c.coeffs[j];
    lp.leq = region.leq;
    lp.eq = region.eq;
    lp.lower_bounds = box_lo;
    auto sol = exact_lp_max(lp);
    if (sol.status != LpStatus::kOptimal)
      throw std::logic_error("region dimension LP failed");
    if (-sol.value == c.rhs) {
      eqs.push_back(c.coeffs);
      rhs.push_back(c.rhs);
    }
  }
  if (equality_rows_out) *equality_rows_out = eqs;
  if (rhs_out) *rhs_out = rhs;
  return n - rank(eqs);
}

}  // namespace

MaximinStepResult maximin_step(const std::vector<AffineFunctional>& functionals,
                               const std::vector<int>& active,
                               const RegionSnapshot& region,
                               const RatVec& box_lo) {
  const int n = static_cast<int>(box_lo.size());
  if (active.empty()) throw std::runtime_error("cascade stalled");

  // max t  s.t.  <eta_i, u> + t <= kappa_i (i active),  u in region.
  LpProblem lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, Rat(0));
  lp.objective[n] = 1;
  auto lift = [n](const LinearConstraint& c, const Rat& tcoef) {
    LinearConstraint out;
    out.coeffs = c.coeffs;
    out.coeffs.push_back(tcoef);
    out.rhs = c.rhs;
    return out;
  };
  for (const auto& c : region.leq) lp.leq.push_back(lift(c, Rat(0)));
  for (const auto& c : region.eq) lp.eq.push_back(lift(c, Rat(0)));
  for (int i : active) {
    LinearConstraint c{functional_row(functionals[i]), functionals[i].kappa};
    lp.leq.push_back(lift(c, Rat(1)));
  }
  RatVec lb = box_lo;
  lb.push_back(Rat(0));
  lp.lower_bounds = lb;
  auto sol = exact_lp_max(lp);
  if (sol.status != LpStatus::kOptimal)
    throw std::logic_error("maximin LP not optimal");
  Rat level = sol.value;

  MaximinStepResult res;
  res.level = level;
  res.region = region;
  for (int i : active)
    res.region.leq.push_back(
        {functional_row(functionals[i]), functionals[i].kappa - level});

  // I_{k+1}: active functionals whose maximum over the cut region stays at
  // the level (so they are identically equal to it there).
  std::vector<int> tight;
  for (int i : active) {
    LpProblem mx;
    mx.num_vars = n;
    mx.objective.resize(n);
    for (int j = 0; j < n; ++j) mx.objective[j] = Rat(-functionals[i].eta[j]);
    mx.leq = res.region.leq;
    mx.eq = res.region.eq;
    mx.lower_bounds = box_lo;
    auto m = exact_lp_max(mx);
    if (m.status != LpStatus::kOptimal)
      throw std::logic_error("tight-set LP not optimal");
    if (m.value + functionals[i].kappa == level) tight.push_back(i);
  }
  res.tight = tight;
  for (int i : tight)
    res.region.eq.push_back(
        {functional_row(functionals[i]), functionals[i].kappa - level});
  res.dim = region_dim(res.region, n, box_lo);
  return res;
}

MaximinTrace central_point(const Polytope& p,
                           const std::vector<AffineFunctional>& extra) {
  const int n = p.dim();
  MaximinTrace trace;
  for (const auto& h : p.halfspaces())
    trace.functionals.push_back({h.eta, h.kappa, false});
  for (const auto& g : extra) {
    auto [eta, s] = make_primitive(g.eta);
    AffineFunctional f{eta, g.kappa / Rat(s), true};
    for (const auto& v : p.vertices())
      if (f.kappa - dot(f.eta, v) <= 0)
        throw std::invalid_argument("ghost functional not positive on polytope");
    trace.functionals.push_back(f);
  }

  LatVec lo, hi;
  p.vertex_box(lo, hi);
  RatVec box_lo = to_rat(lo);

  RegionSnapshot region;
  for (const auto& h : p.halfspaces())
    region.leq.push_back({to_rat(h.eta), h.kappa});

  std::vector<int> active(trace.functionals.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

  int dim = n;
  while (dim > 0) {
    auto step = maximin_step(trace.functionals, active, region, box_lo);
    if (!trace.rounds.empty() && step.level <= trace.rounds.back().level)
      throw std::logic_error("maximin levels not increasing");
    trace.rounds.push_back({step.level, step.tight, step.dim, step.region});
    region = step.region;
    dim = step.dim;
    std::vector<int> next;
    for (int i : active)
      if (std::find(step.tight.begin(), step.tight.end(), i) == step.tight.end())
        next.push_back(i);
    active = std::move(next);
  }

  // dim 0: the accumulated equality system pins the point.
  RatMat eqs;
  RatVec rhs;
  region_dim(region, n, box_lo, &eqs, &rhs);
  auto v0 = solve_unique(eqs, rhs);
  if (!v0) throw std::logic_error("final region is not a point");
  trace.v0 = *v0;
  return trace;
}

std::pair<RatVec, RatVec> segment_endpoints(const RegionSnapshot& region, int n,
                                            const RatVec& box_lo) {
  RatMat eqs;
  RatVec rhs;
  int d = region_dim(region, n, box_lo, &eqs, &rhs);
  if (d != 1) throw std::invalid_argument("region is not a segment");
  RatMat qeqs = eqs;
  auto dirs = rational_nullspace_primitive(qeqs);
  if (dirs.size() != 1) throw std::logic_error("segment direction not unique");
  RatVec obj = to_rat(dirs[0]);
  auto solve_dir = [&](bool neg) {
    LpProblem lp;
    lp.num_vars = n;
    lp.objective = obj;
    if (neg)
      for (auto& c : lp.objective) c = -c;
    lp.leq = region.leq;
    lp.eq = region.eq;
    lp.lower_bounds = box_lo;
    auto sol = exact_lp_max(lp);
    if (sol.status != LpStatus::kOptimal)
      throw std::logic_error("segment endpoint LP failed");
    return sol.point;
  };
  return {solve_dir(true), solve_dir(false)};
}

std::string format_trace(const MaximinTrace& trace) {
  std::ostringstream os;
  for (size_t k = 0; k < trace.rounds.size(); ++k) {
    const auto& r = trace.rounds[k];
    os << (k + 1) << " " << to_string(r.level) << " " << r.dim << " I_"
       << (k + 1) << "={";
    for (size_t i = 0; i < r.tight.size(); ++i) {
      if (i) os << ",";
      os << r.tight[i];
    }
    os << "}\n";
  }
  os << "v0 = " << to_string(trace.v0) << "\n";
  return os.str();
}

}  // namespace probelab
