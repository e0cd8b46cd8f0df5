#include "ghmst/steiner.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "ghmst/errors.hpp"
#include "ghmst/gh.hpp"

namespace ghmst {

namespace {

// Terminals first (ascending), then the chosen extra indices (ascending).
FiniteMetricSpace candidate_subspace(const FiniteMetricSpace& ambient,
                                     const std::vector<std::size_t>& terminals,
                                     const std::vector<std::size_t>& extra) {
  std::vector<std::size_t> indices = terminals;
  indices.insert(indices.end(), extra.begin(), extra.end());
  std::sort(indices.begin(), indices.end());
  return subspace(ambient, indices);
}

}  // namespace

SteinerInstance make_steiner_instance(FiniteMetricSpace ambient,
                                      std::vector<std::size_t> terminals) {
  if (terminals.empty()) throw Error(Errc::empty_subset, "terminal set is empty");
  std::unordered_set<std::size_t> seen;
  for (std::size_t index : terminals) {
    if (index >= ambient.size()) {
      throw Error(Errc::index_out_of_range,
                  "terminal index " + std::to_string(index) + " out of range",
                  {static_cast<std::ptrdiff_t>(index)});
    }
    if (!seen.insert(index).second) {
      throw Error(Errc::dimension_mismatch,
                  "duplicate terminal index " + std::to_string(index),
                  {static_cast<std::ptrdiff_t>(index)});
    }
  }
  std::sort(terminals.begin(), terminals.end());
  return {std::move(ambient), std::move(terminals)};
}

std::vector<FiniteMetricSpace> enumerate_supersets(const SteinerInstance& instance,
                                                   std::optional<double> diameter_cap) {
  const std::size_t n = instance.terminals.size();
  std::vector<std::size_t> others;
  {
    std::unordered_set<std::size_t> terminal_set(instance.terminals.begin(),
                                                 instance.terminals.end());
    for (std::size_t v = 0; v < instance.ambient.size(); ++v)
      if (!terminal_set.contains(v)) others.push_back(v);
  }
  const std::size_t max_extra = n <= 1 ? 0 : std::min(n - 2, others.size());

  std::vector<FiniteMetricSpace> candidates;
  for (std::size_t count = 0; count <= max_extra; ++count) {
    // Lexicographic combinations of `count` extra indices.
    std::vector<std::size_t> pick(count);
    for (std::size_t i = 0; i < count; ++i) pick[i] = i;
    for (;;) {
      std::vector<std::size_t> extra(count);
      for (std::size_t i = 0; i < count; ++i) extra[i] = others[pick[i]];
      FiniteMetricSpace candidate =
          candidate_subspace(instance.ambient, instance.terminals, extra);
      if (!diameter_cap || diameter(candidate) <= *diameter_cap)
        candidates.push_back(std::move(candidate));

      if (count == 0) break;
      std::size_t slot = count;
      while (slot > 0 && pick[slot - 1] == others.size() - count + slot - 1) --slot;
      if (slot == 0) break;
      ++pick[slot - 1];
      for (std::size_t i = slot; i < count; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return candidates;
}

SmtResult smt_finite_ambient(const SteinerInstance& instance) {
  std::vector<FiniteMetricSpace> candidates = enumerate_supersets(instance);
  const FiniteMetricSpace* best_space = nullptr;
  WeightedTree best_tree;
  double best = std::numeric_limits<double>::infinity();
  for (const FiniteMetricSpace& candidate : candidates) {
    WeightedTree tree = minimum_spanning_tree(candidate);
    if (tree.total_length < best) {
      best = tree.total_length;
      best_space = &candidate;
      best_tree = std::move(tree);
    }
  }
  return {best, *best_space, std::move(best_tree)};
}

double smt_via_gh(const SteinerInstance& instance,
                  std::optional<double> diameter_cap, std::optional<double> lambda,
                  const Limits& limits) {
  const std::size_t n = instance.terminals.size();
  const FiniteMetricSpace terminal_space = subspace(instance.ambient, instance.terminals);
  const double d = diameter_cap.value_or(static_cast<double>(n - 1) *
                                         diameter(terminal_space) * (1.0 + 1e-9));
  const double lam = lambda.value_or(2.0 * d);
  if (lam < 2.0 * d) {
    throw Error(Errc::lambda_too_small,
                "lambda = " + std::to_string(lam) + " < 2*d = " + std::to_string(2.0 * d));
  }

  std::vector<FiniteMetricSpace> candidates = enumerate_supersets(instance, d);
  if (candidates.empty()) {
    throw Error(Errc::empty_candidate_set,
                "no candidate vertex set has diameter <= " + std::to_string(d));
  }

  double best = std::numeric_limits<double>::infinity();
  for (const FiniteMetricSpace& candidate : candidates) {
    double sum = 0.0;
    for (std::size_t k = 1; k < candidate.size(); ++k)
      sum += lam - 2.0 * gh_to_simplex(candidate, k + 1, lam, limits).distance;
    best = std::min(best, sum);
  }
  return best;
}

}  // namespace ghmst
