#include "xyv/simplex.hpp"

#include <algorithm>
#include <map>

#include "xyv/error.hpp"

namespace xyv {

namespace {
constexpr double kPivotEps = 1e-11;
constexpr std::size_t kMaxTableau = std::size_t{60'000'000};
}  // namespace

SimplexResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                          const std::vector<double>& c) {
  const std::size_t m = a.size(), n = c.size();
  if (b.size() != m) throw std::invalid_argument("simplex: row count mismatch");
  const std::size_t cols = n + m + 1;  // variables, slacks, rhs
  if ((m + 1) * cols > kMaxTableau) throw BudgetExceeded("simplex tableau too large");
  std::vector<double> t((m + 1) * cols, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * cols + col]; };
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("simplex: ragged constraint matrix");
    if (b[r] < 0) throw std::invalid_argument("simplex: origin must be feasible");
    for (std::size_t j = 0; j < n; ++j) at(r, j) = a[r][j];
    at(r, n + r) = 1.0;
    at(r, cols - 1) = b[r];
  }
  // Objective row stores reduced costs as -c.
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  SimplexResult res;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (at(m, j) < -kPivotEps) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = at(r, cols - 1) / coef;
      if (leave == m || ratio < best - 1e-12 || (ratio <= best + 1e-12 && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) throw std::runtime_error("simplex: objective is unbounded");
    const double piv = at(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) at(leave, j) /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      double* row = &t[r * cols];
      const double* prow = &t[leave * cols];
      for (std::size_t j = 0; j < cols; ++j) row[j] -= f * prow[j];
    }
    basis[leave] = enter;
    ++res.pivots;
  }
  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) res.x[basis[r]] = at(r, cols - 1);
  res.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) res.dual[r] = at(m, n + r);
  res.objective = at(m, cols - 1);
  return res;
}

GameSolution solve_matrix_game(const std::vector<std::vector<std::uint8_t>>& m) {
  const std::size_t rows = m.size();
  if (rows == 0) throw std::invalid_argument("game has no rows");
  const std::size_t cols = m[0].size();
  if (cols == 0) throw std::invalid_argument("game has no columns");
  for (std::size_t j = 0; j < cols; ++j) {
    bool covered = false;
    for (std::size_t i = 0; i < rows && !covered; ++i) covered = m[i][j] != 0;
    if (!covered) throw UncoveredError(j);
  }
  // Identical columns and identical rows collapse to one representative.
  std::map<std::vector<std::uint8_t>, std::size_t> col_ids, row_ids;
  std::vector<std::size_t> col_rep, row_rep;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::uint8_t> key(rows);
    for (std::size_t i = 0; i < rows; ++i) key[i] = m[i][j];
    if (col_ids.emplace(key, col_rep.size()).second) col_rep.push_back(j);
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (row_ids.emplace(m[i], row_rep.size()).second) row_rep.push_back(i);

  // Column player: max sum(w) s.t. M w <= 1, w >= 0. Value = 1/sum(w); the
  // row strategy is read off the shadow prices.
  std::vector<std::vector<double>> a(row_rep.size(), std::vector<double>(col_rep.size()));
  for (std::size_t r = 0; r < row_rep.size(); ++r)
    for (std::size_t c = 0; c < col_rep.size(); ++c) a[r][c] = m[row_rep[r]][col_rep[c]];
  const auto res =
      simplex_max(a, std::vector<double>(row_rep.size(), 1.0), std::vector<double>(col_rep.size(), 1.0));
  if (res.objective <= 0) throw std::runtime_error("game LP returned a nonpositive objective");

  GameSolution sol;
  sol.value = 1.0 / res.objective;
  sol.row_strategy.assign(rows, 0.0);
  sol.col_strategy.assign(cols, 0.0);
  double psum = 0.0;
  for (std::size_t r = 0; r < row_rep.size(); ++r) psum += std::max(0.0, res.dual[r]);
  for (std::size_t r = 0; r < row_rep.size(); ++r) sol.row_strategy[row_rep[r]] = std::max(0.0, res.dual[r]) / psum;
  for (std::size_t c = 0; c < col_rep.size(); ++c) sol.col_strategy[col_rep[c]] = res.x[c] / res.objective;

  double upper = 0.0, lower = 1e300;
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += m[i][j] * sol.col_strategy[j];
    upper = std::max(upper, s);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += m[i][j] * sol.row_strategy[i];
    lower = std::min(lower, s);
  }
  sol.value = lower;
  sol.gap = upper - lower;
  return sol;
}

}  // namespace xyv
