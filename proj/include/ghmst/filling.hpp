#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"

namespace ghmst {

// Binary tree with leaves 0..n-1 and internal vertices n..2n-3: every leaf
// has degree 1, every internal vertex degree 3 (n >= 3 has exactly n-2
// internal vertices). Degenerate fillings are representable by zero-weight
// edges, so restricting to binary topologies does not affect the minimum.
struct SteinerTopology {
  std::size_t leaf_count = 0;
  std::size_t internal_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Sorted leaf bipartitions of the internal edges (side not containing
  // leaf 0, as a bitmask). Equal codes <=> same topology.
  std::vector<std::uint32_t> canonical_code() const;
};

// All (2n-5)!! distinct binary topologies with n labeled leaves, generated by
// inserting leaves in label order into every edge; deterministic order.
std::vector<SteinerTopology> enumerate_topologies(std::size_t leaf_count,
                                                  const Limits& limits = {});

// The filling linear program for one topology: one nonnegative weight per
// edge; for each terminal pair the weights along the leaf path must sum to at
// least the pair distance; minimize total weight.
struct FillingLP {
  std::size_t variable_count = 0;
  std::vector<std::vector<std::size_t>> paths;  // per pair (i<j), edge indices
  std::vector<double> bounds;                   // per pair, required distance
};

FillingLP build_filling_lp(const FiniteMetricSpace& space,
                           const SteinerTopology& topology);

struct FillingSolution {
  double value = 0.0;
  std::vector<double> weights;
};

// Optimal value and weights; verifies feasibility of the returned weights and
// raises lp_numerical_failure if the solver broke down.
FillingSolution solve_filling_lp(const FiniteMetricSpace& space,
                                 const SteinerTopology& topology);

struct MfResult {
  double length = 0.0;
  SteinerTopology topology;
  std::vector<double> weights;
};

// Minimal-filling length: minimum LP value over all topologies.
MfResult mf(const FiniteMetricSpace& space, const Limits& limits = {});

// One random metric extension of the space by `extra` points, every new
// distance drawn inside its triangle-feasible interval and capped by
// diameter_cap.
FiniteMetricSpace random_metric_extension(const FiniteMetricSpace& space,
                                          std::size_t extra,
                                          double diameter_cap,
                                          std::mt19937_64& rng);

// Best (smallest) GH-sum value of mst over randomized, locally refined metric
// extensions V of the space with #V <= 2n-2 and diam V <= diameter_cap.
// Deterministic given seed; always an upper bound for mf within 1e-9.
double mf_upper_bound_search(const FiniteMetricSpace& space,
                             std::optional<double> diameter_cap,
                             std::size_t iterations, std::uint64_t seed);

}  // namespace ghmst
