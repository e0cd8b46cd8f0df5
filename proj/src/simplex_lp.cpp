#include "ghmst/simplex_lp.hpp"

#include <cmath>

#include "ghmst/errors.hpp"

namespace ghmst {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr std::size_t kMaxPivots = 20000;
}  // namespace

SimplexResult simplex_max_canonical(const std::vector<std::vector<double>>& a,
                                    const std::vector<double>& b,
                                    const std::vector<double>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  if (b.size() != rows) {
    throw Error(Errc::lp_numerical_failure, "right-hand side size mismatch");
  }
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw Error(Errc::lp_numerical_failure, "constraint matrix is ragged");
    }
  }
  for (double rhs : b) {
    if (rhs < 0.0) {
      throw Error(Errc::lp_numerical_failure, "canonical form needs b >= 0");
    }
  }

  // Tableau: rows constraints + objective row, columns = structural vars,
  // slacks, rhs. Slack basis is feasible because b >= 0.
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1.0;
    t[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  for (std::size_t j = 0; j < cols; ++j) t[rows][j] = -c[j];

  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots > kMaxPivots) {
      throw Error(Errc::lp_numerical_failure, "pivot limit reached");
    }
    // Bland: entering variable is the lowest-index column with a negative
    // reduced cost.
    std::size_t enter = width - 1;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[rows][j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width - 1) break;

    // Bland again on the ratio-test ties: lowest basis index leaves.
    std::size_t leave = rows;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      throw Error(Errc::lp_numerical_failure, "LP is unbounded");
    }

    const double inv = 1.0 / t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] *= inv;
    t[leave][enter] = 1.0;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
      t[i][enter] = 0.0;
    }
    basis[leave] = enter;
  }

  SimplexResult result;
  result.objective = t[rows][width - 1];
  result.x.assign(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) result.x[basis[i]] = t[i][width - 1];
  result.duals.assign(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) result.duals[i] = t[rows][cols + i];
  return result;
}

}  // namespace ghmst
