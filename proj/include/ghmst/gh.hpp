#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"
#include "ghmst/spanning.hpp"

namespace ghmst {

// Nonempty relation between two point sets whose projections onto both sides
// are surjective.
struct Correspondence {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted lexicographically

  // Largest number of partners any first-side (resp. second-side) point has.
  // A value of 1 on the first side means the relation is a function there,
  // i.e. its preimages partition that side.
  std::size_t max_multiplicity_first() const;
  std::size_t max_multiplicity_second() const;
};

enum class GHAlgorithm { exhaustive, branch_and_bound };
enum class GHMethod { exhaustive, branch_and_bound, closed_form };

const char* gh_method_name(GHMethod method);

struct GHResult {
  double distance = 0.0;
  // Optimal correspondence with distortion == 2*distance; absent for
  // closed-form evaluations.
  std::optional<Correspondence> witness;
  GHMethod method = GHMethod::closed_form;
  std::uint64_t nodes_explored = 0;
};

// max | dist_X(x,x') - dist_Y(y,y') | over pairs of related pairs.
double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const std::vector<std::pair<std::size_t, std::size_t>>& rel);

// Minimum half-distortion over all correspondences, with an optimal witness.
// exhaustive enumerates all relations with surjective projections
// (|X|*|Y| <= limits.max_exhaustive_product); branch_and_bound assigns each
// X-point a nonempty subset of Y, tracking Y-coverage and pruning on partial
// distortion (sizes <= limits.max_bnb_n).
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  GHAlgorithm algorithm, const Limits& limits = {});

// Picks branch_and_bound when both sizes fit, else exhaustive when the
// product fits, else raises size_limit_exceeded.
GHResult gh_exact_auto(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const Limits& limits = {});

// ( d_GH(lambda*X, lambda*Y), lambda * d_GH(X, Y) ) for direct comparison.
std::pair<double, double> gh_scaled_pair(const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y,
                                         double lambda,
                                         const Limits& limits = {});

// d_GH(X, lambda*Delta_m). Uses the closed forms when they apply (m == 1;
// or lambda >= 2*diam X), otherwise falls back to gh_exact_auto against the
// simplex, subject to its size limits.
GHResult gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda,
                       const Limits& limits = {});

// ( lambda - 2*d_GH(X, lambda*Delta_{k+1}) ) for k = 1..size-1; requires
// lambda >= 2*diam X.
Spectrum spectrum_via_gh(const FiniteMetricSpace& x, double lambda,
                         const Limits& limits = {});

// lambda*(size-1) - 2 * sum_k d_GH(X, lambda*Delta_{k+1}); terms beyond the
// size contribute zero, so the sum truncates exactly.
double mst_length_via_gh(const FiniteMetricSpace& x, double lambda,
                         const Limits& limits = {});

}  // namespace ghmst
