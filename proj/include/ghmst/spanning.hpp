#pragma once

#include <cstddef>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"

namespace ghmst {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;  // u < v
  double length = 0.0;
};

struct WeightedTree {
  std::size_t vertex_count = 0;
  std::vector<WeightedEdge> edges;  // vertex_count - 1 edges
  double total_length = 0.0;
};

// Edge lengths of a minimum spanning tree, ordered descending. Independent of
// which minimum spanning tree is taken; empty for one-point spaces.
struct Spectrum {
  std::vector<double> values;
};

// Greedy edge insertion over edges sorted by (length, smaller index, larger
// index); deterministic under ties. Tree edges are listed in acceptance
// order.
WeightedTree minimum_spanning_tree(const FiniteMetricSpace& space);

double mst_length(const FiniteMetricSpace& space);

Spectrum mst_spectrum(const FiniteMetricSpace& space);

// All n^(n-2) labeled spanning trees of the complete graph on the space,
// decoded from Pruefer sequences in lexicographic order. Test oracle;
// refuses beyond limits.max_tree_enumeration_n.
std::vector<WeightedTree> all_spanning_trees(const FiniteMetricSpace& space,
                                             const Limits& limits = {});

// Subsequence of all_spanning_trees with total length within 1e-12 of the
// minimum.
std::vector<WeightedTree> all_minimum_spanning_trees(const FiniteMetricSpace& space,
                                                     const Limits& limits = {});

}  // namespace ghmst
