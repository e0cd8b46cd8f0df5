#include "ghmst/spanning.hpp"

#include <algorithm>
#include <numeric>

#include "ghmst/errors.hpp"

namespace ghmst {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<WeightedEdge> sorted_complete_edges(const FiniteMetricSpace& space) {
  std::vector<WeightedEdge> edges;
  edges.reserve(space.size() * (space.size() - 1) / 2);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j)
      edges.push_back({i, j, space.dist(i, j)});
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return edges;
}

WeightedTree tree_from_edges(const FiniteMetricSpace& space,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  WeightedTree tree;
  tree.vertex_count = space.size();
  for (auto [u, v] : pairs) {
    if (u > v) std::swap(u, v);
    const double length = space.dist(u, v);
    tree.edges.push_back({u, v, length});
    tree.total_length += length;
  }
  return tree;
}

}  // namespace

WeightedTree minimum_spanning_tree(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  WeightedTree tree;
  tree.vertex_count = n;
  if (n <= 1) return tree;

  DisjointSets components(n);
  for (const WeightedEdge& edge : sorted_complete_edges(space)) {
    if (!components.unite(edge.u, edge.v)) continue;
    tree.edges.push_back(edge);
    tree.total_length += edge.length;
    if (tree.edges.size() == n - 1) break;
  }
  return tree;
}

double mst_length(const FiniteMetricSpace& space) {
  return minimum_spanning_tree(space).total_length;
}

Spectrum mst_spectrum(const FiniteMetricSpace& space) {
  Spectrum spectrum;
  for (const WeightedEdge& edge : minimum_spanning_tree(space).edges)
    spectrum.values.push_back(edge.length);
  std::sort(spectrum.values.begin(), spectrum.values.end(), std::greater<double>());
  return spectrum;
}

std::vector<WeightedTree> all_spanning_trees(const FiniteMetricSpace& space,
                                             const Limits& limits) {
  const std::size_t n = space.size();
  if (n > limits.max_tree_enumeration_n) {
    throw Error(Errc::size_limit_exceeded,
                "spanning-tree enumeration capped at n = " +
                    std::to_string(limits.max_tree_enumeration_n) + ", got " +
                    std::to_string(n),
                {static_cast<std::ptrdiff_t>(n),
                 static_cast<std::ptrdiff_t>(limits.max_tree_enumeration_n)});
  }

  std::vector<WeightedTree> trees;
  if (n <= 1) {
    WeightedTree degenerate;
    degenerate.vertex_count = n;
    trees.push_back(degenerate);
    return trees;
  }
  if (n == 2) {
    trees.push_back(tree_from_edges(space, {{0, 1}}));
    return trees;
  }

  // Odometer over all Pruefer sequences in lexicographic order.
  std::vector<std::size_t> seq(n - 2, 0);
  std::vector<std::size_t> degree(n);
  for (;;) {
    std::fill(degree.begin(), degree.end(), std::size_t{1});
    for (std::size_t s : seq) ++degree[s];

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n - 1);
    std::vector<std::size_t> remaining = degree;
    for (std::size_t s : seq) {
      std::size_t leaf = 0;
      while (remaining[leaf] != 1) ++leaf;
      pairs.emplace_back(leaf, s);
      remaining[leaf] = 0;
      --remaining[s];
    }
    std::size_t first = 0;
    while (remaining[first] != 1) ++first;
    std::size_t second = first + 1;
    while (remaining[second] != 1) ++second;
    pairs.emplace_back(first, second);
    trees.push_back(tree_from_edges(space, std::move(pairs)));

    std::size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == n - 1) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return trees;
}

std::vector<WeightedTree> all_minimum_spanning_trees(const FiniteMetricSpace& space,
                                                     const Limits& limits) {
  std::vector<WeightedTree> trees = all_spanning_trees(space, limits);
  double minimum = trees.front().total_length;
  for (const WeightedTree& tree : trees) minimum = std::min(minimum, tree.total_length);

  std::vector<WeightedTree> result;
  for (WeightedTree& tree : trees) {
    if (tree.total_length <= minimum + 1e-12) result.push_back(std::move(tree));
  }
  return result;
}

}  // namespace ghmst
