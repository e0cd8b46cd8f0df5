#include "ghmst/gh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "ghmst/errors.hpp"

namespace ghmst {

namespace {

void check_relation(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                    const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  if (rel.empty()) throw Error(Errc::empty_relation, "relation has no pairs");
  for (const auto& [i, j] : rel) {
    if (i >= x.size() || j >= y.size()) {
      throw Error(Errc::index_out_of_range,
                  "relation pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range",
                  {static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)});
    }
  }
}

std::vector<std::size_t> by_eccentricity(const FiniteMetricSpace& space) {
  std::vector<double> ecc(space.size(), 0.0);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      ecc[i] = std::max(ecc[i], space.dist(i, j));
  std::vector<std::size_t> order(space.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&ecc](std::size_t a, std::size_t b) {
    return ecc[a] > ecc[b];
  });
  return order;
}

Correspondence make_witness(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return Correspondence{std::move(pairs)};
}

// Deterministic feasible correspondence used as the initial upper bound:
// match points by eccentricity rank, then attach each uncovered Y point to
// the X point that adds the least distortion.
std::vector<std::pair<std::size_t, std::size_t>> greedy_correspondence(
    const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::vector<std::size_t> xo = by_eccentricity(x);
  const std::vector<std::size_t> yo = by_eccentricity(y);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r = 0; r < xo.size(); ++r)
    pairs.emplace_back(xo[r], yo[std::min(r, yo.size() - 1)]);

  auto dis_with = [&](std::size_t xi, std::size_t yj) {
    double worst = 0.0;
    for (const auto& [xi2, yj2] : pairs)
      worst = std::max(worst, std::abs(x.dist(xi, xi2) - y.dist(yj, yj2)));
    return worst;
  };
  for (std::size_t r = xo.size(); r < yo.size(); ++r) {
    const std::size_t yj = yo[r];
    std::size_t best_x = 0;
    double best_dis = std::numeric_limits<double>::infinity();
    for (std::size_t xi = 0; xi < x.size(); ++xi) {
      const double candidate = dis_with(xi, yj);
      if (candidate < best_dis) {
        best_dis = candidate;
        best_x = xi;
      }
    }
    pairs.emplace_back(best_x, yj);
  }
  return pairs;
}

GHResult gh_exhaustive(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const Limits& limits) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  const std::size_t product = nx * ny;
  const std::size_t cap = std::min<std::size_t>(limits.max_exhaustive_product, 30);
  if (product > cap) {
    throw Error(Errc::size_limit_exceeded,
                "exhaustive search needs |X|*|Y| <= " + std::to_string(cap) +
                    ", got " + std::to_string(product),
                {static_cast<std::ptrdiff_t>(product), static_cast<std::ptrdiff_t>(cap)});
  }

  // Distortion contribution of every pair of candidate pairs, by bit index.
  std::vector<double> delta(product * product);
  for (std::size_t a = 0; a < product; ++a)
    for (std::size_t b = 0; b < product; ++b)
      delta[a * product + b] =
          std::abs(x.dist(a / ny, b / ny) - y.dist(a % ny, b % ny));

  std::vector<std::uint64_t> row_mask(nx, 0), col_mask(ny, 0);
  for (std::size_t a = 0; a < product; ++a) {
    row_mask[a / ny] |= std::uint64_t{1} << a;
    col_mask[a % ny] |= std::uint64_t{1} << a;
  }

  const std::uint64_t full = product == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << product) - 1;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  std::uint64_t evaluated = 0;
  std::vector<std::size_t> bits;
  bits.reserve(product);

  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    bool surjective = true;
    for (std::size_t i = 0; i < nx && surjective; ++i)
      surjective = (mask & row_mask[i]) != 0;
    for (std::size_t j = 0; j < ny && surjective; ++j)
      surjective = (mask & col_mask[j]) != 0;
    if (!surjective) continue;

    ++evaluated;
    bits.clear();
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      bits.push_back(static_cast<std::size_t>(std::countr_zero(rest)));

    double dis = 0.0;
    for (std::size_t p = 0; p < bits.size() && dis < best; ++p) {
      const double* row = delta.data() + bits[p] * product;
      for (std::size_t q = p + 1; q < bits.size(); ++q) {
        dis = std::max(dis, row[bits[q]]);
        if (dis >= best) break;
      }
    }
    if (dis < best) {
      best = dis;
      best_mask = mask;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::uint64_t rest = best_mask; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<std::size_t>(std::countr_zero(rest));
    pairs.emplace_back(a / ny, a % ny);
  }
  return {best / 2.0, make_witness(std::move(pairs)), GHMethod::exhaustive, evaluated};
}

GHResult gh_branch_and_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                             const Limits& limits) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  if (nx > limits.max_bnb_n || ny > limits.max_bnb_n) {
    throw Error(Errc::size_limit_exceeded,
                "branch-and-bound capped at n = " + std::to_string(limits.max_bnb_n) +
                    " per space, got " + std::to_string(nx) + " and " +
                    std::to_string(ny),
                {static_cast<std::ptrdiff_t>(std::max(nx, ny)),
                 static_cast<std::ptrdiff_t>(limits.max_bnb_n)});
  }

  const std::vector<std::size_t> xorder = by_eccentricity(x);

  // Candidate Y-subsets, small ones first so low-distortion assignments are
  // tried early; the internal diameter of each subset is cached.
  const std::uint32_t subset_count = (std::uint32_t{1} << ny) - 1;
  std::vector<std::uint32_t> subsets(subset_count);
  for (std::uint32_t s = 1; s <= subset_count; ++s) subsets[s - 1] = s;
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<double> subset_diam(subset_count + 1, 0.0);
  for (std::uint32_t s = 1; s <= subset_count; ++s) {
    double worst = 0.0;
    for (std::size_t j = 0; j < ny; ++j) {
      if (!(s >> j & 1u)) continue;
      for (std::size_t j2 = j + 1; j2 < ny; ++j2)
        if (s >> j2 & 1u) worst = std::max(worst, y.dist(j, j2));
    }
    subset_diam[s] = worst;
  }

  std::vector<std::pair<std::size_t, std::size_t>> incumbent = greedy_correspondence(x, y);
  double best = distortion(x, y, incumbent);
  std::uint64_t nodes = 0;

  const double root_bound = std::abs(diameter(x) - diameter(y));
  if (best > root_bound) {
    const std::uint32_t full = subset_count;
    std::vector<std::pair<std::size_t, std::size_t>> assigned;
    std::vector<std::uint32_t> chosen(nx, 0);
    assigned.reserve(nx * ny);

    // Depth-first over eccentricity-ordered X points; prune once the partial
    // distortion cannot beat the incumbent.
    auto descend = [&](auto&& self, std::size_t level, double partial,
                       std::uint32_t covered) -> void {
      const std::size_t xi = xorder[level];
      for (std::uint32_t s : subsets) {
        ++nodes;
        double dis = std::max(partial, subset_diam[s]);
        if (dis >= best) continue;
        for (std::size_t j = 0; j < ny && dis < best; ++j) {
          if (!(s >> j & 1u)) continue;
          for (const auto& [xi2, yj2] : assigned) {
            dis = std::max(dis, std::abs(x.dist(xi, xi2) - y.dist(j, yj2)));
            if (dis >= best) break;
          }
        }
        if (dis >= best) continue;

        if (level + 1 == nx) {
          if ((covered | s) != full) continue;
          best = dis;
          incumbent.clear();
          for (std::size_t l = 0; l < level; ++l)
            for (std::size_t j = 0; j < ny; ++j)
              if (chosen[l] >> j & 1u) incumbent.emplace_back(xorder[l], j);
          for (std::size_t j = 0; j < ny; ++j)
            if (s >> j & 1u) incumbent.emplace_back(xi, j);
          continue;
        }

        chosen[level] = s;
        const std::size_t added = assigned.size();
        for (std::size_t j = 0; j < ny; ++j)
          if (s >> j & 1u) assigned.emplace_back(xi, j);
        self(self, level + 1, dis, covered | s);
        assigned.resize(added);
      }
    };
    descend(descend, 0, 0.0, 0);
  }

  return {best / 2.0, make_witness(std::move(incumbent)), GHMethod::branch_and_bound,
          nodes};
}

}  // namespace

std::size_t Correspondence::max_multiplicity_first() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [i, j] : pairs) ++counts[i];
  std::size_t worst = 0;
  for (const auto& [i, count] : counts) worst = std::max(worst, count);
  return worst;
}

std::size_t Correspondence::max_multiplicity_second() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [i, j] : pairs) ++counts[j];
  std::size_t worst = 0;
  for (const auto& [j, count] : counts) worst = std::max(worst, count);
  return worst;
}

const char* gh_method_name(GHMethod method) {
  switch (method) {
    case GHMethod::exhaustive: return "exhaustive";
    case GHMethod::branch_and_bound: return "branch_and_bound";
    case GHMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  check_relation(x, y, rel);
  double worst = 0.0;
  for (std::size_t p = 0; p < rel.size(); ++p)
    for (std::size_t q = p; q < rel.size(); ++q)
      worst = std::max(worst, std::abs(x.dist(rel[p].first, rel[q].first) -
                                       y.dist(rel[p].second, rel[q].second)));
  return worst;
}

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  GHAlgorithm algorithm, const Limits& limits) {
  return algorithm == GHAlgorithm::exhaustive ? gh_exhaustive(x, y, limits)
                                              : gh_branch_and_bound(x, y, limits);
}

GHResult gh_exact_auto(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const Limits& limits) {
  if (x.size() <= limits.max_bnb_n && y.size() <= limits.max_bnb_n)
    return gh_exact(x, y, GHAlgorithm::branch_and_bound, limits);
  if (x.size() * y.size() <= limits.max_exhaustive_product)
    return gh_exact(x, y, GHAlgorithm::exhaustive, limits);
  throw Error(Errc::size_limit_exceeded,
              "no exact algorithm fits sizes " + std::to_string(x.size()) + " x " +
                  std::to_string(y.size()),
              {static_cast<std::ptrdiff_t>(x.size() * y.size()),
               static_cast<std::ptrdiff_t>(limits.max_exhaustive_product)});
}

std::pair<double, double> gh_scaled_pair(const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y, double lambda,
                                         const Limits& limits) {
  if (!(lambda > 0.0)) {
    throw Error(Errc::nonpositive_lambda,
                "scale factor must be positive, got " + std::to_string(lambda));
  }
  const GHResult scaled = gh_exact_auto(scale(x, lambda), scale(y, lambda), limits);
  const GHResult plain = gh_exact_auto(x, y, limits);
  return {scaled.distance, lambda * plain.distance};
}

GHResult gh_to_simplex(const FiniteMetricSpace& x, std::size_t m, double lambda,
                       const Limits& limits) {
  if (m < 1) throw Error(Errc::invalid_k, "simplex size m must be >= 1");
  if (!(lambda > 0.0)) {
    throw Error(Errc::nonpositive_lambda,
                "lambda must be positive, got " + std::to_string(lambda));
  }
  const std::size_t n = x.size();
  if (m == 1) {
    // The one-point target admits exactly one correspondence, the full
    // relation, whose distortion is diam X.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, 0);
    return {diameter(x) / 2.0, make_witness(std::move(pairs)), GHMethod::closed_form, 0};
  }
  if (lambda >= 2.0 * diameter(x)) {
    if (m <= n) {
      const double sigma = mst_spectrum(x).values[m - 2];
      return {(lambda - sigma) / 2.0, std::nullopt, GHMethod::closed_form, 0};
    }
    return {lambda / 2.0, std::nullopt, GHMethod::closed_form, 0};
  }
  return gh_exact_auto(x, simplex({m, lambda}), limits);
}

Spectrum spectrum_via_gh(const FiniteMetricSpace& x, double lambda,
                         const Limits& limits) {
  const std::size_t n = x.size();
  if (n == 1) return {};
  const double floor = 2.0 * diameter(x);
  if (lambda < floor) {
    throw Error(Errc::lambda_too_small,
                "lambda = " + std::to_string(lambda) + " < 2*diam = " +
                    std::to_string(floor));
  }
  Spectrum spectrum;
  for (std::size_t k = 1; k < n; ++k)
    spectrum.values.push_back(lambda -
                              2.0 * gh_to_simplex(x, k + 1, lambda, limits).distance);
  return spectrum;
}

double mst_length_via_gh(const FiniteMetricSpace& x, double lambda,
                         const Limits& limits) {
  const std::size_t n = x.size();
  if (n == 1) return 0.0;  // empty sum, any lambda
  if (!(lambda > 0.0)) {
    throw Error(Errc::nonpositive_lambda,
                "lambda must be positive, got " + std::to_string(lambda));
  }
  const double floor = 2.0 * diameter(x);
  if (lambda < floor) {
    throw Error(Errc::lambda_too_small,
                "lambda = " + std::to_string(lambda) + " < 2*diam = " +
                    std::to_string(floor));
  }
  double sum = 0.0;
  for (std::size_t k = 1; k < n; ++k)
    sum += gh_to_simplex(x, k + 1, lambda, limits).distance;
  return lambda * static_cast<double>(n - 1) - 2.0 * sum;
}

}  // namespace ghmst
