#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"

namespace ghmst {

// Split of {0..n-1} into nonempty, pairwise-disjoint blocks. Canonical form:
// blocks ordered by their minimal element, elements ascending within a block.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
};

// Streams every partition of {0..n-1} into exactly k nonempty blocks, each
// exactly once, in restricted-growth-string order. Never materializes the
// full list.
class PartitionStream {
 public:
  PartitionStream(std::size_t n, std::size_t k, const Limits& limits = {});

  // Moves to the next partition; false once exhausted.
  bool advance();

  // Block-assignment codes of the current partition (the growth string).
  // Valid only after advance() returned true.
  const std::vector<int>& codes() const noexcept { return codes_; }

  Partition current() const;
  std::optional<Partition> next();

 private:
  void fill_suffix(std::size_t from);

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> codes_;
  std::vector<int> prefix_max_;
};

// Materialized convenience wrapper around PartitionStream.
std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k,
                                            const Limits& limits = {});

// Minimum distance between distinct blocks; requires at least two blocks.
double alpha(const FiniteMetricSpace& space, const Partition& partition);

// max{ alpha(D) : D a partition into k+1 blocks }, the k-th spectrum value.
double spectrum_via_partitions(const FiniteMetricSpace& space, std::size_t k,
                               const Limits& limits = {});

// Partition induced by deleting the k longest edges of the deterministic
// minimum spanning tree (ties follow the MST edge order).
Partition mst_cut_partition(const FiniteMetricSpace& space, std::size_t k);

}  // namespace ghmst
