#include "ghmst/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "ghmst/errors.hpp"

namespace ghmst {

namespace {

void check_subset(const FiniteMetricSpace& space, std::span<const std::size_t> set,
                  const char* which) {
  if (set.empty()) {
    throw Error(Errc::empty_subset, std::string(which) + " subset is empty");
  }
  for (std::size_t index : set) {
    if (index >= space.size()) {
      throw Error(Errc::index_out_of_range,
                  std::string(which) + " index " + std::to_string(index) +
                      " out of range for size " + std::to_string(space.size()),
                  {static_cast<std::ptrdiff_t>(index)});
    }
  }
}

}  // namespace

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = dist(i, j);
  return out;
}

std::size_t FiniteMetricSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw Error(Errc::index_out_of_range, "unknown label '" + label + "'");
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& matrix,
                                  std::vector<std::string> labels) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(Errc::dimension_mismatch, "matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(Errc::dimension_mismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(matrix[i].size()) + " entries, expected " +
                      std::to_string(n),
                  {static_cast<std::ptrdiff_t>(i)});
    }
  }
  if (labels.size() != n) {
    throw Error(Errc::dimension_mismatch,
                std::to_string(labels.size()) + " labels for a " +
                    std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  {
    std::unordered_set<std::string> seen;
    for (const std::string& label : labels) {
      if (!seen.insert(label).second) {
        throw Error(Errc::dimension_mismatch, "duplicate label '" + label + "'");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(matrix[i][j])) {
        throw Error(Errc::parse_error,
                    "non-finite distance at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    {static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) {
      throw Error(Errc::nonzero_diagonal,
                  "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                      "] = " + std::to_string(matrix[i][i]),
                  {static_cast<std::ptrdiff_t>(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(Errc::not_symmetric,
                    "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] != dist[" + std::to_string(j) + "][" + std::to_string(i) + "]",
                    {static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(matrix[i][j] > 0.0)) {
        throw Error(Errc::negative_or_zero_off_diagonal,
                    "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(matrix[i][j]),
                    {static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double detour = matrix[i][k] + matrix[k][j];
        if (matrix[i][j] > detour * (1.0 + kMetricEps)) {
          throw Error(Errc::triangle_violation,
                      "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                          "] > dist[" + std::to_string(i) + "][" + std::to_string(k) +
                          "] + dist[" + std::to_string(k) + "][" + std::to_string(j) + "]",
                      {static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j),
                       static_cast<std::ptrdiff_t>(k)});
        }
      }
    }
  }

  FiniteMetricSpace space;
  space.n_ = n;
  space.labels_ = std::move(labels);
  space.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) space.dist_[i * n + j] = matrix[i][j];
  return space;
}

double diameter(const FiniteMetricSpace& space) {
  double best = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j)
      best = std::max(best, space.dist(i, j));
  return best;
}

double set_distance(const FiniteMetricSpace& space,
                    std::span<const std::size_t> a,
                    std::span<const std::size_t> b) {
  check_subset(space, a, "first");
  check_subset(space, b, "second");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a)
    for (std::size_t j : b) best = std::min(best, space.dist(i, j));
  return best;
}

double hausdorff_distance(const FiniteMetricSpace& space,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b) {
  check_subset(space, a, "first");
  check_subset(space, b, "second");
  double worst = 0.0;
  for (std::size_t i : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j : b) nearest = std::min(nearest, space.dist(i, j));
    worst = std::max(worst, nearest);
  }
  for (std::size_t j : b) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i : a) nearest = std::min(nearest, space.dist(i, j));
    worst = std::max(worst, nearest);
  }
  return worst;
}

FiniteMetricSpace scale(const FiniteMetricSpace& space, double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(Errc::nonpositive_lambda,
                "scale factor must be positive, got " + std::to_string(lambda));
  }
  auto matrix = space.matrix();
  for (auto& row : matrix)
    for (double& entry : row) entry *= lambda;
  return validate_metric(matrix, space.labels());
}

FiniteMetricSpace simplex(const SimplexSpec& spec) {
  if (spec.n < 1) throw Error(Errc::dimension_mismatch, "simplex needs n >= 1");
  if (!(spec.lambda > 0.0)) {
    throw Error(Errc::nonpositive_lambda,
                "simplex edge length must be positive, got " +
                    std::to_string(spec.lambda));
  }
  std::vector<std::vector<double>> matrix(spec.n, std::vector<double>(spec.n, spec.lambda));
  std::vector<std::string> labels(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    matrix[i][i] = 0.0;
    labels[i] = std::to_string(i + 1);
  }
  return validate_metric(matrix, std::move(labels));
}

FiniteMetricSpace subspace(const FiniteMetricSpace& space,
                           std::span<const std::size_t> indices) {
  check_subset(space, indices, "subspace");
  {
    std::unordered_set<std::size_t> seen;
    for (std::size_t index : indices) {
      if (!seen.insert(index).second) {
        throw Error(Errc::dimension_mismatch,
                    "duplicate index " + std::to_string(index) + " in subspace",
                    {static_cast<std::ptrdiff_t>(index)});
      }
    }
  }
  const std::size_t m = indices.size();
  std::vector<std::vector<double>> matrix(m, std::vector<double>(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = space.labels()[indices[i]];
    for (std::size_t j = 0; j < m; ++j) matrix[i][j] = space.dist(indices[i], indices[j]);
  }
  return validate_metric(matrix, std::move(labels));
}

}  // namespace ghmst
