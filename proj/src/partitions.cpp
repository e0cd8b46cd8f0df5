#include "ghmst/partitions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ghmst/errors.hpp"
#include "ghmst/spanning.hpp"

namespace ghmst {

PartitionStream::PartitionStream(std::size_t n, std::size_t k, const Limits& limits)
    : n_(n), k_(k) {
  if (n < 1 || k < 1 || k > n) {
    throw Error(Errc::invalid_k,
                "need 1 <= k <= n, got k = " + std::to_string(k) +
                    ", n = " + std::to_string(n));
  }
  if (n > limits.max_partition_n) {
    throw Error(Errc::size_limit_exceeded,
                "partition enumeration capped at n = " +
                    std::to_string(limits.max_partition_n) + ", got " +
                    std::to_string(n),
                {static_cast<std::ptrdiff_t>(n),
                 static_cast<std::ptrdiff_t>(limits.max_partition_n)});
  }
  codes_.resize(n, 0);
  prefix_max_.resize(n, 0);
}

void PartitionStream::fill_suffix(std::size_t from) {
  // Lexicographically smallest completion that still reaches exactly k blocks:
  // zeros first, then the missing block values in increasing order.
  const int have = prefix_max_[from - 1] + 1;
  const std::size_t missing = k_ - static_cast<std::size_t>(have);
  const std::size_t remaining = n_ - from;
  const std::size_t zeros = remaining - missing;
  for (std::size_t t = 0; t < remaining; ++t) {
    const std::size_t position = from + t;
    codes_[position] = t < zeros ? 0 : have + static_cast<int>(t - zeros);
    prefix_max_[position] = std::max(prefix_max_[position - 1], codes_[position]);
  }
}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    codes_[0] = 0;
    prefix_max_[0] = 0;
    if (n_ > 1) fill_suffix(1);
    return true;
  }
  for (std::size_t i = n_ - 1; i >= 1; --i) {
    const int before = prefix_max_[i - 1];
    const int value = codes_[i] + 1;
    if (value > before + 1 || value > static_cast<int>(k_) - 1) continue;
    const int top = std::max(before, value);
    const std::size_t blocks_so_far = static_cast<std::size_t>(top) + 1;
    const std::size_t remaining = n_ - 1 - i;
    if (k_ - blocks_so_far > remaining) continue;
    codes_[i] = value;
    prefix_max_[i] = top;
    if (i + 1 < n_) fill_suffix(i + 1);
    return true;
  }
  done_ = true;
  return false;
}

Partition PartitionStream::current() const {
  Partition partition;
  partition.blocks.resize(k_);
  for (std::size_t i = 0; i < n_; ++i)
    partition.blocks[static_cast<std::size_t>(codes_[i])].push_back(i);
  return partition;
}

std::optional<Partition> PartitionStream::next() {
  if (!advance()) return std::nullopt;
  return current();
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k,
                                            const Limits& limits) {
  PartitionStream stream(n, k, limits);
  std::vector<Partition> partitions;
  while (auto partition = stream.next()) partitions.push_back(std::move(*partition));
  return partitions;
}

double alpha(const FiniteMetricSpace& space, const Partition& partition) {
  const std::size_t n = space.size();
  if (partition.block_count() < 2) {
    throw Error(Errc::single_block, "alpha needs at least two blocks");
  }
  std::vector<int> block_of(n, -1);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (partition.blocks[b].empty()) {
      throw Error(Errc::empty_subset, "partition block " + std::to_string(b) + " is empty");
    }
    for (std::size_t index : partition.blocks[b]) {
      if (index >= n) {
        throw Error(Errc::index_out_of_range,
                    "partition index " + std::to_string(index) + " out of range",
                    {static_cast<std::ptrdiff_t>(index)});
      }
      if (block_of[index] != -1) {
        throw Error(Errc::dimension_mismatch,
                    "index " + std::to_string(index) + " appears in two blocks",
                    {static_cast<std::ptrdiff_t>(index)});
      }
      block_of[index] = static_cast<int>(b);
      ++covered;
    }
  }
  if (covered != n) {
    throw Error(Errc::dimension_mismatch, "partition does not cover the index range");
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (block_of[i] != block_of[j]) best = std::min(best, space.dist(i, j));
  return best;
}

double spectrum_via_partitions(const FiniteMetricSpace& space, std::size_t k,
                               const Limits& limits) {
  const std::size_t n = space.size();
  if (n > limits.max_partition_n) {
    throw Error(Errc::size_limit_exceeded,
                "partition enumeration capped at n = " +
                    std::to_string(limits.max_partition_n) + ", got " +
                    std::to_string(n),
                {static_cast<std::ptrdiff_t>(n),
                 static_cast<std::ptrdiff_t>(limits.max_partition_n)});
  }
  if (k < 1 || k > n - 1) {
    throw Error(Errc::index_out_of_range,
                "spectrum index k must satisfy 1 <= k <= n-1, got " + std::to_string(k),
                {static_cast<std::ptrdiff_t>(k)});
  }

  double best = 0.0;
  PartitionStream stream(n, k + 1, limits);
  while (stream.advance()) {
    const std::vector<int>& codes = stream.codes();
    double cross = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n && cross > best; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (codes[i] == codes[j]) continue;
        cross = std::min(cross, space.dist(i, j));
        if (cross <= best) break;
      }
    }
    best = std::max(best, cross);
  }
  return best;
}

Partition mst_cut_partition(const FiniteMetricSpace& space, std::size_t k) {
  const std::size_t n = space.size();
  if (k < 1 || k > n - 1 || n < 2) {
    throw Error(Errc::index_out_of_range,
                "cut count k must satisfy 1 <= k <= n-1, got " + std::to_string(k),
                {static_cast<std::ptrdiff_t>(k)});
  }
  // MST edges are already in deterministic (length, u, v) acceptance order,
  // so the k longest edges are the last k.
  const WeightedTree tree = minimum_spanning_tree(space);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::size_t e = 0; e + k < tree.edges.size(); ++e) {
    parent[find(tree.edges[e].u)] = find(tree.edges[e].v);
  }

  std::vector<std::vector<std::size_t>> by_root(n);
  std::vector<std::size_t> root_order;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (by_root[root].empty()) root_order.push_back(root);
    by_root[root].push_back(v);
  }
  Partition partition;
  for (std::size_t root : root_order) partition.blocks.push_back(std::move(by_root[root]));
  return partition;
}

}  // namespace ghmst
