#include "ghmst/filling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghmst/errors.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/simplex_lp.hpp"
#include "ghmst/spanning.hpp"

namespace ghmst {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const SteinerTopology& topology) {
  std::vector<std::vector<std::size_t>> adjacent(topology.leaf_count +
                                                 topology.internal_count);
  for (const auto& [u, v] : topology.edges) {
    adjacent[u].push_back(v);
    adjacent[v].push_back(u);
  }
  return adjacent;
}

// Edge indices on the unique path between two vertices.
std::vector<std::size_t> tree_path(const SteinerTopology& topology, std::size_t from,
                                   std::size_t to) {
  const std::size_t vertex_count = topology.leaf_count + topology.internal_count;
  std::vector<std::ptrdiff_t> parent_edge(vertex_count, -1);
  std::vector<std::size_t> parent(vertex_count, vertex_count);
  std::vector<std::size_t> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (std::size_t e = 0; e < topology.edges.size(); ++e) {
      const auto& [p, q] = topology.edges[e];
      if (p != v && q != v) continue;
      const std::size_t w = p == v ? q : p;
      if (parent[w] != vertex_count) continue;
      parent[w] = v;
      parent_edge[w] = static_cast<std::ptrdiff_t>(e);
      stack.push_back(w);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = parent[v])
    path.push_back(static_cast<std::size_t>(parent_edge[v]));
  std::reverse(path.begin(), path.end());
  return path;
}

double value_at(const std::vector<double>& weights, const std::vector<std::size_t>& path) {
  double sum = 0.0;
  for (std::size_t e : path) sum += weights[e];
  return sum;
}

// splitmix64; gives each search iteration an independent substream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Feasible interval for the distance between `p` and `t` given all other
// entries of the matrix, capped by `cap`.
std::pair<double, double> entry_window(const std::vector<std::vector<double>>& m,
                                       std::size_t p, std::size_t t, double cap) {
  double lo = 0.0;
  double hi = cap;
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (w == p || w == t) continue;
    lo = std::max(lo, std::abs(m[p][w] - m[w][t]));
    hi = std::min(hi, m[p][w] + m[w][t]);
  }
  return {lo, hi};
}

}  // namespace

std::vector<std::uint32_t> SteinerTopology::canonical_code() const {
  const std::size_t vertex_count = leaf_count + internal_count;
  std::vector<std::uint32_t> code;
  const std::uint32_t leaf_mask = (std::uint32_t{1} << leaf_count) - 1;
  for (const auto& [u, v] : edges) {
    if (u < leaf_count || v < leaf_count) continue;  // only internal edges split
    // Leaves on v's side of the edge (u,v).
    std::uint32_t side = 0;
    std::vector<bool> seen(vertex_count, false);
    seen[u] = true;
    std::vector<std::size_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      if (w < leaf_count) side |= std::uint32_t{1} << w;
      for (const auto& [p, q] : edges) {
        if (p != w && q != w) continue;
        const std::size_t next = p == w ? q : p;
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    if (side & 1u) side = leaf_mask & ~side;
    code.push_back(side);
  }
  std::sort(code.begin(), code.end());
  return code;
}

std::vector<SteinerTopology> enumerate_topologies(std::size_t leaf_count,
                                                  const Limits& limits) {
  if (leaf_count < 2) {
    throw Error(Errc::invalid_k, "topologies need at least 2 leaves");
  }
  if (leaf_count > limits.max_topology_n) {
    throw Error(Errc::size_limit_exceeded,
                "topology enumeration capped at n = " +
                    std::to_string(limits.max_topology_n) + ", got " +
                    std::to_string(leaf_count),
                {static_cast<std::ptrdiff_t>(leaf_count),
                 static_cast<std::ptrdiff_t>(limits.max_topology_n)});
  }

  if (leaf_count == 2) {
    SteinerTopology edge;
    edge.leaf_count = 2;
    edge.internal_count = 0;
    edge.edges = {{0, 1}};
    return {edge};
  }

  SteinerTopology star;
  star.leaf_count = leaf_count;
  star.internal_count = 1;
  star.edges = {{0, leaf_count}, {1, leaf_count}, {2, leaf_count}};
  std::vector<SteinerTopology> current{star};

  // Insert each remaining leaf into every edge of every partial topology;
  // each final topology arises from exactly one insertion history.
  for (std::size_t leaf = 3; leaf < leaf_count; ++leaf) {
    const std::size_t fresh = leaf_count + (leaf - 2);
    std::vector<SteinerTopology> expanded;
    expanded.reserve(current.size() * (2 * leaf - 3));
    for (const SteinerTopology& topology : current) {
      for (std::size_t e = 0; e < topology.edges.size(); ++e) {
        SteinerTopology next = topology;
        const auto [a, b] = next.edges[e];
        next.internal_count += 1;
        next.edges[e] = {std::min(a, fresh), std::max(a, fresh)};
        next.edges.emplace_back(std::min(b, fresh), std::max(b, fresh));
        next.edges.emplace_back(std::min(leaf, fresh), std::max(leaf, fresh));
        expanded.push_back(std::move(next));
      }
    }
    current = std::move(expanded);
  }
  return current;
}

FillingLP build_filling_lp(const FiniteMetricSpace& space,
                           const SteinerTopology& topology) {
  if (topology.leaf_count != space.size()) {
    throw Error(Errc::dimension_mismatch,
                "topology has " + std::to_string(topology.leaf_count) +
                    " leaves for a space of " + std::to_string(space.size()) +
                    " points");
  }
  FillingLP lp;
  lp.variable_count = topology.edges.size();
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      lp.paths.push_back(tree_path(topology, i, j));
      lp.bounds.push_back(space.dist(i, j));
    }
  }
  return lp;
}

FillingSolution solve_filling_lp(const FiniteMetricSpace& space,
                                 const SteinerTopology& topology) {
  if (space.size() < 2) {
    throw Error(Errc::invalid_k, "filling LP needs at least 2 points");
  }
  const FillingLP lp = build_filling_lp(space, topology);

  // Solve the dual (max sum d_p y_p subject to, per edge, sum of y over the
  // pairs routed through it <= 1); its shadow prices are the edge weights.
  const std::size_t pair_count = lp.paths.size();
  std::vector<std::vector<double>> a(lp.variable_count,
                                     std::vector<double>(pair_count, 0.0));
  for (std::size_t p = 0; p < pair_count; ++p)
    for (std::size_t e : lp.paths[p]) a[e][p] = 1.0;
  const SimplexResult solved = simplex_max_canonical(
      a, std::vector<double>(lp.variable_count, 1.0), lp.bounds);

  FillingSolution solution{solved.objective, solved.duals};

  double total = 0.0;
  for (double w : solution.weights) {
    if (w < -1e-12) throw Error(Errc::lp_numerical_failure, "negative edge weight");
    total += w;
  }
  const double tolerance = 1e-9 * std::max(1.0, std::abs(solution.value));
  if (std::abs(total - solution.value) > tolerance) {
    throw Error(Errc::lp_numerical_failure, "duality gap in filling LP");
  }
  for (std::size_t p = 0; p < pair_count; ++p) {
    if (value_at(solution.weights, lp.paths[p]) < lp.bounds[p] - 1e-9) {
      throw Error(Errc::lp_numerical_failure, "infeasible weights from filling LP");
    }
  }
  return solution;
}

MfResult mf(const FiniteMetricSpace& space, const Limits& limits) {
  if (space.size() < 2) {
    throw Error(Errc::invalid_k, "mf needs at least 2 points");
  }
  std::vector<SteinerTopology> topologies = enumerate_topologies(space.size(), limits);
  MfResult best;
  best.length = std::numeric_limits<double>::infinity();
  for (SteinerTopology& topology : topologies) {
    FillingSolution solution = solve_filling_lp(space, topology);
    if (solution.value < best.length) {
      best.length = solution.value;
      best.topology = std::move(topology);
      best.weights = std::move(solution.weights);
    }
  }
  return best;
}

FiniteMetricSpace random_metric_extension(const FiniteMetricSpace& space,
                                          std::size_t extra, double diameter_cap,
                                          std::mt19937_64& rng) {
  if (!(diameter_cap > 0.0) || diameter_cap < diameter(space)) {
    throw Error(Errc::empty_candidate_set,
                "diameter cap " + std::to_string(diameter_cap) +
                    " below the diameter of the base space");
  }
  std::vector<std::vector<double>> matrix = space.matrix();
  std::vector<std::string> labels = space.labels();
  const double positivity_floor = 1e-9 * diameter_cap;

  for (std::size_t added = 0; added < extra; ++added) {
    const std::size_t q = matrix.size();
    std::vector<double> row(q + 1, 0.0);
    for (std::size_t i = 0; i < q; ++i) {
      // Window induced by the triangle inequality against the distances
      // already chosen; never empty when the base entries are metric.
      double lo = positivity_floor;
      double hi = diameter_cap;
      for (std::size_t j = 0; j < i; ++j) {
        lo = std::max(lo, std::abs(row[j] - matrix[j][i]));
        hi = std::min(hi, row[j] + matrix[j][i]);
      }
      if (hi < lo) hi = lo;
      std::uniform_real_distribution<double> pick(lo, hi);
      row[i] = pick(rng);
    }
    for (std::size_t i = 0; i < q; ++i) matrix[i].push_back(row[i]);
    matrix.push_back(row);
    std::string label = "s" + std::to_string(added + 1);
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(label);
  }
  return validate_metric(matrix, std::move(labels));
}

double mf_upper_bound_search(const FiniteMetricSpace& space,
                             std::optional<double> diameter_cap,
                             std::size_t iterations, std::uint64_t seed) {
  const std::size_t n = space.size();
  if (n < 2) throw Error(Errc::invalid_k, "search needs at least 2 points");
  if (n > 5) {
    throw Error(Errc::size_limit_exceeded,
                "search capped at n = 5, got " + std::to_string(n),
                {static_cast<std::ptrdiff_t>(n), 5});
  }
  if (iterations < 1) {
    throw Error(Errc::invalid_iterations, "need at least one iteration");
  }
  const double base_diam = diameter(space);
  const double d =
      diameter_cap.value_or(static_cast<double>(n - 1) * base_diam * (1.0 + 1e-9));
  if (d < base_diam) {
    throw Error(Errc::empty_candidate_set,
                "diameter cap " + std::to_string(d) + " excludes the space itself");
  }
  const double lam = 2.0 * d;
  const std::size_t max_extra = n - 2;

  double best = mst_length_via_gh(space, lam);  // V = M baseline
  for (std::size_t iteration = 0; iteration < iterations; ++iteration) {
    std::mt19937_64 rng(mix_seed(seed, iteration));
    const std::size_t extra = max_extra == 0 ? 0 : rng() % (max_extra + 1);
    if (extra == 0) continue;  // candidate is M, already counted

    FiniteMetricSpace candidate = random_metric_extension(space, extra, d, rng);
    std::vector<std::vector<double>> matrix = candidate.matrix();
    const std::size_t total = matrix.size();

    // Coordinate descent on the free entries (those touching an added
    // point); metric validity is re-established through validate_metric at
    // every accepted step.
    double current = mst_length(candidate);
    for (std::size_t pass = 0; pass < 6; ++pass) {
      bool improved = false;
      for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t t = p + 1; t < total; ++t) {
          if (t < n) continue;  // both endpoints in M: entry is fixed
          const auto [lo, hi] = entry_window(matrix, p, t, d);
          if (hi <= lo) continue;
          const double saved = matrix[p][t];
          double best_value = saved;
          double best_length = current;
          for (int step = 0; step <= 8; ++step) {
            const double candidate_value =
                std::max(lo, 1e-12) +
                (hi - std::max(lo, 1e-12)) * static_cast<double>(step) / 8.0;
            matrix[p][t] = matrix[t][p] = candidate_value;
            const double length = mst_length(validate_metric(matrix, candidate.labels()));
            if (length < best_length - 1e-15) {
              best_length = length;
              best_value = candidate_value;
            }
          }
          matrix[p][t] = matrix[t][p] = best_value;
          if (best_length < current - 1e-15) {
            current = best_length;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }

    const FiniteMetricSpace refined = validate_metric(matrix, candidate.labels());
    best = std::min(best, mst_length_via_gh(refined, lam));
  }
  return best;
}

}  // namespace ghmst
