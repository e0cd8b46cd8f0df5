#include "ghmst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghmst/errors.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/partitions.hpp"
#include "ghmst/spanning.hpp"

namespace ghmst {

namespace {

constexpr double kCheckTolerance = 1e-12;

CheckRecord make_check(std::string name, std::vector<double> lhs,
                       std::vector<double> rhs, bool scalar) {
  CheckRecord record;
  record.name = std::move(name);
  record.lhs = std::move(lhs);
  record.rhs = std::move(rhs);
  record.scalar = scalar;
  double worst = 0.0;
  for (std::size_t i = 0; i < std::max(record.lhs.size(), record.rhs.size()); ++i) {
    const double a = i < record.lhs.size() ? record.lhs[i] : 0.0;
    const double b = i < record.rhs.size() ? record.rhs[i] : 0.0;
    worst = std::max(worst, std::abs(a - b));
  }
  if (record.lhs.size() != record.rhs.size()) {
    worst = std::numeric_limits<double>::infinity();
  }
  record.abs_diff = worst;
  record.pass = worst <= kCheckTolerance;
  return record;
}

CheckRecord scalar_check(std::string name, double lhs, double rhs) {
  return make_check(std::move(name), {lhs}, {rhs}, true);
}

}  // namespace

std::vector<CheckRecord> verify_space(const FiniteMetricSpace& space,
                                      std::optional<double> lambda,
                                      const Limits& limits) {
  const std::size_t n = space.size();
  const std::size_t cap = std::min(limits.max_bnb_n, limits.max_tree_enumeration_n);
  if (n > cap || n > limits.max_partition_n) {
    throw Error(Errc::size_limit_exceeded,
                "verify needs every oracle to fit; capped at n = " + std::to_string(cap) +
                    ", got " + std::to_string(n),
                {static_cast<std::ptrdiff_t>(n), static_cast<std::ptrdiff_t>(cap)});
  }
  const double diam = diameter(space);
  const double lam = lambda.value_or(diam > 0.0 ? 2.0 * diam : 1.0);
  if (lam < 2.0 * diam) {
    throw Error(Errc::lambda_too_small,
                "lambda = " + std::to_string(lam) + " < 2*diam = " +
                    std::to_string(2.0 * diam));
  }

  std::vector<CheckRecord> checks;
  const Spectrum spectrum = mst_spectrum(space);

  {
    std::vector<double> by_partitions;
    for (std::size_t k = 1; k < n; ++k)
      by_partitions.push_back(spectrum_via_partitions(space, k, limits));
    checks.push_back(make_check("spectrum_mst_vs_partitions", spectrum.values,
                                std::move(by_partitions), false));
  }
  {
    checks.push_back(make_check("spectrum_mst_vs_gh", spectrum.values,
                                spectrum_via_gh(space, lam, limits).values, false));
  }
  {
    std::vector<double> closed, exact;
    for (std::size_t k = 1; k < n; ++k) {
      closed.push_back(gh_to_simplex(space, k + 1, lam, limits).distance);
      exact.push_back(gh_exact_auto(space, simplex({k + 1, lam}), limits).distance);
    }
    checks.push_back(make_check("gh_closed_form_vs_exact", std::move(closed),
                                std::move(exact), false));
  }
  {
    const GHResult extra = gh_exact_auto(space, simplex({n + 1, lam}), limits);
    checks.push_back(scalar_check("gh_oversized_simplex", extra.distance, lam / 2.0));
  }
  {
    checks.push_back(scalar_check("mst_vs_gh_sum", mst_length(space),
                                  mst_length_via_gh(space, lam, limits)));
  }
  {
    // Every minimum spanning tree must expose the same descending edge-length
    // vector.
    const std::vector<WeightedTree> trees = all_minimum_spanning_trees(space, limits);
    double worst = 0.0;
    std::vector<double> reference = spectrum.values;
    std::vector<double> farthest = reference;
    for (const WeightedTree& tree : trees) {
      std::vector<double> lengths;
      for (const WeightedEdge& edge : tree.edges) lengths.push_back(edge.length);
      std::sort(lengths.begin(), lengths.end(), std::greater<double>());
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (std::abs(lengths[i] - reference[i]) > worst) {
          worst = std::abs(lengths[i] - reference[i]);
          farthest = lengths;
        }
      }
    }
    checks.push_back(make_check("mst_spectra_equal_across_msts", reference,
                                std::move(farthest), false));
  }
  {
    const FiniteMetricSpace target =
        diam > 0.0 ? simplex({2, diam}) : simplex({1, 1.0});
    const auto [scaled, direct] = gh_scaled_pair(space, target, 2.0, limits);
    checks.push_back(scalar_check("scale_homothety_lambda_2", scaled, direct));
  }
  return checks;
}

bool all_pass(const std::vector<CheckRecord>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& record) { return record.pass; });
}

}  // namespace ghmst
