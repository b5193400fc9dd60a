#include "probelab/lp.hpp"

#include <stdexcept>

namespace probelab {

namespace {

// Dense simplex tableau. Columns: structural variables (shifted or split),
// then slacks, then artificials; one row per constraint plus the cost row.
struct Tableau {
  std::vector<RatVec> rows;  // m x (cols + 1), last entry is the rhs
  RatVec cost;               // cols + 1, last entry is -objective value
  std::vector<int> basis;    // basic variable per row
  int cols = 0;

  void price_out(int row) {
    if (cost[basis[row]] == 0) return;
    Rat f = cost[basis[row]];
    for (int j = 0; j <= cols; ++j) cost[j] -= f * rows[row][j];
  }

  void pivot(int row, int col) {
    Rat p = rows[row][col];
    for (int j = 0; j <= cols; ++j) rows[row][j] /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == row || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = 0; j <= cols; ++j) rows[i][j] -= f * rows[row][j];
    }
    if (cost[col] != 0) {
      Rat f = cost[col];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * rows[row][j];
    }
    basis[row] = col;
  }

  // Bland: lowest-index entering column with positive reduced profit.
  // Returns false at optimality; throws kUnbounded via sentinel -1 row.
  enum class Step { kOptimal, kPivoted, kUnbounded };

  Step step(int usable_cols) {
    int enter = -1;
    for (int j = 0; j < usable_cols; ++j) {
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Step::kOptimal;
    int leave = -1;
    Rat best;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rat ratio = rows[i][cols] / rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = static_cast<int>(i);
        best = ratio;
      }
    }
    if (leave < 0) return Step::kUnbounded;
    pivot(leave, enter);
    return Step::kPivoted;
  }
};

}  // namespace

LpSolution exact_lp_max(const LpProblem& problem) {
  const int n = problem.num_vars;
  const bool shifted = problem.lower_bounds.has_value();
  const int structural = shifted ? n : 2 * n;
  const int m = static_cast<int>(problem.leq.size() + problem.eq.size());
  const int slacks = static_cast<int>(problem.leq.size());

  // Structural coefficient and shifted rhs for one constraint.
  auto build_row = [&](const LinearConstraint& c, RatVec& row, Rat& rhs) {
    rhs = c.rhs;
    if (shifted) {
      for (int j = 0; j < n; ++j) {
        row[j] = c.coeffs[j];
        rhs -= c.coeffs[j] * (*problem.lower_bounds)[j];
      }
    } else {
      for (int j = 0; j < n; ++j) {
        row[2 * j] = c.coeffs[j];
        row[2 * j + 1] = -c.coeffs[j];
      }
    }
  };

  // Pass 1: decide which rows need artificials.
  std::vector<RatVec> srows(m, RatVec(structural, Rat(0)));
  RatVec srhs(m);
  std::vector<bool> negated(m, false);
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    const bool is_eq = i >= slacks;
    const LinearConstraint& c =
        is_eq ? problem.eq[i - slacks] : problem.leq[i];
    build_row(c, srows[i], srhs[i]);
    if (srhs[i] < 0) {
      negated[i] = true;
      for (auto& v : srows[i]) v = -v;
      srhs[i] = -srhs[i];
    }
    if (is_eq || negated[i]) ++artificials;
  }

  Tableau t;
  t.cols = structural + slacks + artificials;
  t.rows.assign(m, RatVec(t.cols + 1, Rat(0)));
  t.basis.assign(m, -1);
  int next_art = structural + slacks;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < structural; ++j) t.rows[i][j] = srows[i][j];
    t.rows[i][t.cols] = srhs[i];
    const bool is_eq = i >= slacks;
    if (!is_eq) {
      Rat s = negated[i] ? Rat(-1) : Rat(1);
      t.rows[i][structural + i] = s;
      if (!negated[i]) t.basis[i] = structural + i;
    }
    if (t.basis[i] < 0) {
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  // Phase 1: maximize -sum(artificials).
  if (artificials > 0) {
    t.cost.assign(t.cols + 1, Rat(0));
    for (int j = structural + slacks; j < t.cols; ++j) t.cost[j] = -1;
    for (int i = 0; i < m; ++i) t.price_out(i);
    while (true) {
      auto s = t.step(t.cols);
      if (s == Tableau::Step::kOptimal) break;
      if (s == Tableau::Step::kUnbounded)
        throw std::logic_error("phase-1 unbounded");
    }
    if (t.cost[t.cols] != 0) return {LpStatus::kInfeasible, Rat(0), {}};
    // Drive leftover artificials out of the basis.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < structural + slacks) continue;
      int col = -1;
      for (int j = 0; j < structural + slacks; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) t.pivot(i, col);
      // else: redundant row; harmless to leave the artificial basic at 0.
    }
  }

  // Phase 2.
  t.cost.assign(t.cols + 1, Rat(0));
  if (shifted) {
    for (int j = 0; j < n; ++j) t.cost[j] = problem.objective[j];
  } else {
    for (int j = 0; j < n; ++j) {
      t.cost[2 * j] = problem.objective[j];
      t.cost[2 * j + 1] = -problem.objective[j];
    }
  }
  // Artificial columns are frozen out by restricting entering candidates.
  for (int i = 0; i < m; ++i) t.price_out(i);
  while (true) {
    auto s = t.step(structural + slacks);
    if (s == Tableau::Step::kOptimal) break;
    if (s == Tableau::Step::kUnbounded) return {LpStatus::kUnbounded, Rat(0), {}};
  }

  RatVec raw(t.cols, Rat(0));
  for (int i = 0; i < m; ++i) raw[t.basis[i]] = t.rows[i][t.cols];
  RatVec x(n);
  for (int j = 0; j < n; ++j) {
    if (shifted)
      x[j] = raw[j] + (*problem.lower_bounds)[j];
    else
      x[j] = raw[2 * j] - raw[2 * j + 1];
  }
  Rat value = 0;
  for (int j = 0; j < n; ++j) value += problem.objective[j] * x[j];
  return {LpStatus::kOptimal, value, x};
}

}  // namespace probelab
