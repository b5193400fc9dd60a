#include "probelab/intlinalg.hpp"

#include <stdexcept>

namespace probelab {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat a) { return static_cast<int>(echelon(a).size()); }

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
  if (a.empty()) return std::nullopt;
  size_t n = a[0].size();
  RatMat aug = a;
  for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = echelon(aug);
  // Inconsistent if a pivot lands in the augmented column.
  for (int p : pivots)
    if (p == static_cast<int>(n)) return std::nullopt;
  if (pivots.size() != n) return std::nullopt;
  RatVec x(n);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::vector<LatVec> rational_nullspace_primitive(RatMat a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  auto pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<LatVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    Int m = 1;
    for (const auto& c : v) m = lcm(m, c.get_den());
    LatVec w(cols);
    for (size_t i = 0; i < cols; ++i) w[i] = Rat(v[i] * Rat(m)).get_num();
    basis.push_back(make_primitive(w).first);
  }
  return basis;
}

IntMat integer_kernel_basis(const IntMat& rows, int n) {
  // Column-style HNF: apply unimodular column operations to `rows` until each
  // row has at most one new pivot; kernel basis = U-columns under the zero
  // columns of the reduced matrix.
  IntMat a = rows;
  IntMat u = identity_mat(n);
  size_t m = a.size();
  auto col_swap = [&](int i, int j) {
    for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
  };
  auto col_axpy = [&](int dst, const Int& f, int src) {  // col_dst += f*col_src
    for (size_t r = 0; r < m; ++r) a[r][dst] += f * a[r][src];
    for (int r = 0; r < n; ++r) u[r][dst] += f * u[r][src];
  };
  auto col_neg = [&](int j) {
    for (size_t r = 0; r < m; ++r) a[r][j] = -a[r][j];
    for (int r = 0; r < n; ++r) u[r][j] = -u[r][j];
  };
  int lead = 0;
  for (size_t r = 0; r < m && lead < n; ++r) {
    // gcd-reduce columns lead..n-1 against row r
    while (true) {
      int nz = -1, cnt = 0;
      for (int j = lead; j < n; ++j)
        if (a[r][j] != 0) {
          ++cnt;
          if (nz < 0 || abs(a[r][j]) < abs(a[r][nz])) nz = j;
        }
      if (cnt == 0) break;
      if (cnt == 1) {
        col_swap(lead, nz);
        if (a[r][lead] < 0) col_neg(lead);
        ++lead;
        break;
      }
      for (int j = lead; j < n; ++j) {
        if (j == nz || a[r][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][nz].get_mpz_t());
        col_axpy(j, -q, nz);
      }
    }
  }
  IntMat basis(n, LatVec(n - lead));
  for (int i = 0; i < n; ++i)
    for (int j = lead; j < n; ++j) basis[i][j - lead] = u[i][j];
  return basis;
}

IntMat extend_to_unimodular(const IntMat& basis_cols) {
  int n = static_cast<int>(basis_cols.size());
  int k = basis_cols.empty() ? 0 : static_cast<int>(basis_cols[0].size());
  if (k == n) {
    Int d = det(basis_cols);
    if (d != 1 && d != -1) throw std::invalid_argument("basis not saturated");
    return basis_cols;
  }
  // Row reduce R*K = [T; 0] with R unimodular; saturation forces |det T| = 1,
  // and then [K*T^{-1} | last columns of R^{-1}] = R^{-1}.
  IntMat a = basis_cols;
  IntMat rinv = identity_mat(n);  // accumulate inverse row ops on the right
  auto row_axpy = [&](int dst, const Int& f, int src) {
    for (int j = 0; j < k; ++j) a[dst][j] += f * a[src][j];
    // R' = E R  =>  R'^{-1} = R^{-1} E^{-1}: column op on rinv
    for (int i = 0; i < n; ++i) rinv[i][src] -= f * rinv[i][dst];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (int r = 0; r < n; ++r) std::swap(rinv[r][i], rinv[r][j]);
  };
  for (int c = 0; c < k; ++c) {
    while (true) {
      int nz = -1, cnt = 0;
      for (int i = c; i < n; ++i)
        if (a[i][c] != 0) {
          ++cnt;
          if (nz < 0 || abs(a[i][c]) < abs(a[nz][c])) nz = i;
        }
      if (nz < 0) throw std::invalid_argument("basis columns not independent");
      if (cnt == 1) {
        if (nz != c) row_swap(c, nz);
        break;
      }
      for (int i = c; i < n; ++i) {
        if (i == nz || a[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[nz][c].get_mpz_t());
        row_axpy(i, -q, nz);
      }
    }
  }
  IntMat t(k, LatVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = a[i][j];
  Int dt = det(t);
  if (dt != 1 && dt != -1) throw std::invalid_argument("basis not saturated");
  IntMat tinv = unimodular_inverse(t);
  IntMat result(n, LatVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      Int s = 0;
      for (int l = 0; l < k; ++l) s += basis_cols[i][l] * tinv[l][j];
      result[i][j] = s;
    }
    for (int j = k; j < n; ++j) result[i][j] = rinv[i][j];
  }
  Int d = det(result);
  if (d != 1 && d != -1) throw std::logic_error("unimodular extension failed");
  return result;
}

}  // namespace probelab
