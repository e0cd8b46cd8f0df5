#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"
#include "ghmst/spanning.hpp"

namespace ghmst {

// Terminal set M inside a finite ambient space. Terminals are stored as
// ascending ambient indices.
struct SteinerInstance {
  FiniteMetricSpace ambient;
  std::vector<std::size_t> terminals;
};

SteinerInstance make_steiner_instance(FiniteMetricSpace ambient,
                                      std::vector<std::size_t> terminals);

// All V with M <= V <= X and #V <= 2#M-2 (V = M alone when #M = 1), as
// restricted subspaces in added-index-combination order; optionally filtered
// to diam V <= diameter_cap.
std::vector<FiniteMetricSpace> enumerate_supersets(
    const SteinerInstance& instance,
    std::optional<double> diameter_cap = {});

struct SmtResult {
  double length;
  FiniteMetricSpace space;  // achieving vertex set V
  WeightedTree tree;        // minimum spanning tree of V
};

// Steiner minimal tree length via superset enumeration: the minimum of
// mst_length(V) over all candidates.
SmtResult smt_finite_ambient(const SteinerInstance& instance);

// Same length computed through Gromov--Hausdorff distances to simplices.
// Defaults: diameter_cap = (#M-1)*diam(M)*(1+1e-9), lambda = 2*diameter_cap;
// supplied values must satisfy lambda >= 2*diameter_cap.
double smt_via_gh(const SteinerInstance& instance,
                  std::optional<double> diameter_cap = {},
                  std::optional<double> lambda = {},
                  const Limits& limits = {});

}  // namespace ghmst
