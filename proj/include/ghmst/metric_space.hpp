#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ghmst {

// Relative tolerance for triangle-inequality validation. Tolerates decimal
// round-trip noise without admitting genuinely broken inputs.
inline constexpr double kMetricEps = 1e-9;

struct SimplexSpec {
  std::size_t n = 1;
  double lambda = 1.0;
};

// A finite metric space: distinct labels plus a validated symmetric distance
// matrix. Instances are immutable values; construction goes through
// validate_metric so an instance always satisfies the metric axioms (triangle
// inequality within kMetricEps).
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  double dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  std::vector<std::vector<double>> matrix() const;

  // Index of a label; Errc::index_out_of_range if unknown.
  std::size_t index_of(const std::string& label) const;

  friend FiniteMetricSpace validate_metric(
      const std::vector<std::vector<double>>& matrix,
      std::vector<std::string> labels);

 private:
  FiniteMetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> dist_;  // row-major n*n
};

// Checks the metric axioms in a fixed order (shape, diagonal, symmetry,
// positivity, triangle) and reports the first violation with its witnessing
// indices.
FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& matrix,
                                  std::vector<std::string> labels);

// Max pairwise distance; 0 for a one-point space.
double diameter(const FiniteMetricSpace& space);

// min{ dist(a,b) : a in A, b in B }; 0 whenever A and B intersect.
double set_distance(const FiniteMetricSpace& space,
                    std::span<const std::size_t> a,
                    std::span<const std::size_t> b);

// max( max_a min_b dist, max_b min_a dist ) over nonempty subsets.
double hausdorff_distance(const FiniteMetricSpace& space,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b);

// Multiplies every distance by lambda > 0.
FiniteMetricSpace scale(const FiniteMetricSpace& space, double lambda);

// n points, every nonzero distance equal to lambda; labels "1".."n".
FiniteMetricSpace simplex(const SimplexSpec& spec);

// Restriction of the space to the given distinct indices, keeping labels and
// the given point order.
FiniteMetricSpace subspace(const FiniteMetricSpace& space,
                           std::span<const std::size_t> indices);

}  // namespace ghmst
