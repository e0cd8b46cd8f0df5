#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ghmst/errors.hpp"
#include "ghmst/filling.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/simplex_lp.hpp"
#include "ghmst/spanning.hpp"
#include "ghmst/steiner.hpp"
#include "support/test_spaces.hpp"

using namespace ghmst;
using testsupport::random_space;
using testsupport::triangle_345;
using testsupport::y5;

TEST_CASE("simplex solver on a hand-checked program") {
  // max 3u + 5v st u <= 4, 2v <= 12, 3u + 2v <= 18
  const SimplexResult result = simplex_max_canonical(
      {{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {3, 5});
  CHECK(result.objective == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(result.x[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.x[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(simplex_max_canonical({{1.0}}, {-1.0}, {1.0}), Error);
}

TEST_CASE("topology enumeration counts follow the double factorial") {
  CHECK(enumerate_topologies(2).size() == 1);
  CHECK(enumerate_topologies(3).size() == 1);
  CHECK(enumerate_topologies(4).size() == 3);
  CHECK(enumerate_topologies(5).size() == 15);
  CHECK(enumerate_topologies(6).size() == 105);
  CHECK(enumerate_topologies(7).size() == 945);
  CHECK_THROWS_AS(enumerate_topologies(1), Error);
  try {
    enumerate_topologies(8);
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::size_limit_exceeded);
  }
}

TEST_CASE("every topology is a binary tree and all are distinct") {
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    const auto topologies = enumerate_topologies(n);
    std::set<std::vector<std::uint32_t>> codes;
    for (const SteinerTopology& topology : topologies) {
      CHECK(topology.leaf_count == n);
      CHECK(topology.internal_count == n - 2);
      CHECK(topology.edges.size() == 2 * n - 3);
      std::vector<int> degree(2 * n - 2, 0);
      for (const auto& [u, v] : topology.edges) {
        ++degree[u];
        ++degree[v];
      }
      for (std::size_t leaf = 0; leaf < n; ++leaf) CHECK(degree[leaf] == 1);
      for (std::size_t internal = n; internal < 2 * n - 2; ++internal)
        CHECK(degree[internal] == 3);
      CHECK(codes.insert(topology.canonical_code()).second);
    }
    CHECK(codes.size() == topologies.size());
  }
}

TEST_CASE("filling LP on frozen examples") {
  {
    const auto star = enumerate_topologies(3).front();
    const FillingSolution solution = solve_filling_lp(triangle_345(), star);
    CHECK(solution.value == doctest::Approx(6.0).epsilon(1e-12));
    REQUIRE(solution.weights.size() == 3);
    CHECK(solution.weights[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(solution.weights[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(solution.weights[2] == doctest::Approx(3.0).epsilon(1e-9));
  }
  {
    const auto edge = enumerate_topologies(2).front();
    const auto pair = validate_metric({{0, 0.375}, {0.375, 0}}, {"a", "b"});
    const FillingSolution solution = solve_filling_lp(pair, edge);
    CHECK(solution.value == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(solution.weights == std::vector<double>{0.375});
  }
  {
    const auto star = enumerate_topologies(3).front();
    const FillingSolution solution = solve_filling_lp(simplex({3, 1.0}), star);
    CHECK(solution.value == doctest::Approx(1.5).epsilon(1e-12));
    for (double weight : solution.weights)
      CHECK(weight == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("LP solutions are feasible and locally tight") {
  std::mt19937_64 rng(131);
  for (int round = 0; round < 10; ++round) {
    const auto space = random_space(rng, 4 + round % 2);
    for (const SteinerTopology& topology : enumerate_topologies(space.size())) {
      const FillingLP lp = build_filling_lp(space, topology);
      const FillingSolution solution = solve_filling_lp(space, topology);
      for (double weight : solution.weights) CHECK(weight >= -1e-12);
      for (std::size_t p = 0; p < lp.paths.size(); ++p) {
        double along = 0.0;
        for (std::size_t e : lp.paths[p]) along += solution.weights[e];
        CHECK(along >= lp.bounds[p] - 1e-9);
      }
      // no single edge can give up 1e-6 of weight and stay feasible
      for (std::size_t e = 0; e < solution.weights.size(); ++e) {
        if (solution.weights[e] < 1e-6) continue;
        bool breaks_some_constraint = false;
        for (std::size_t p = 0; p < lp.paths.size() && !breaks_some_constraint; ++p) {
          if (std::find(lp.paths[p].begin(), lp.paths[p].end(), e) ==
              lp.paths[p].end())
            continue;
          double along = -1e-6;
          for (std::size_t edge : lp.paths[p]) along += solution.weights[edge];
          breaks_some_constraint = along < lp.bounds[p] - 1e-7;
        }
        CHECK(breaks_some_constraint);
      }
    }
  }
}

TEST_CASE("mf on frozen examples") {
  CHECK(mf(triangle_345()).length == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(mf(simplex({3, 1.0})).length == doctest::Approx(1.5).epsilon(1e-12));
  const auto pair = validate_metric({{0, 2.5}, {2.5, 0}}, {"a", "b"});
  CHECK(mf(pair).length == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS(mf(simplex({1, 1.0})), Error);
}

TEST_CASE("simplex fillings across the full topology range") {
  // computed values: the star-like filling with every leaf edge at lambda/2
  // is optimal for all sizes the enumeration covers
  for (std::size_t n = 3; n <= 7; ++n) {
    const MfResult result = mf(simplex({n, 1.0}));
    CHECK(result.length ==
          doctest::Approx(static_cast<double>(n) / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("three-point fillings realize the half-perimeter") {
  std::mt19937_64 rng(137);
  for (int round = 0; round < 50; ++round) {
    const auto space = random_space(rng, 3);
    const double half_perimeter =
        (space.dist(0, 1) + space.dist(0, 2) + space.dist(1, 2)) / 2.0;
    CHECK(std::abs(mf(space).length - half_perimeter) <= 1e-9);
  }
}

TEST_CASE("mf scales linearly and never exceeds the mst length") {
  std::mt19937_64 rng(139);
  for (int round = 0; round < 12; ++round) {
    const auto space = random_space(rng, 2 + round % 5);
    const MfResult result = mf(space);
    CHECK(result.length <= mst_length(space) + 1e-9);

    const double lambda = 0.5 + (round % 3);
    const double scaled = mf(scale(space, lambda)).length;
    CHECK(std::abs(scaled - lambda * result.length) <=
          1e-9 * std::max(1.0, std::abs(scaled)));
  }
}

TEST_CASE("mf lower-bounds the Steiner length of any embedding") {
  const auto hub = make_steiner_instance(y5(0.6), {0, 1, 2});
  const double steiner_length = smt_finite_ambient(hub).length;
  CHECK(mf(simplex({3, 1.0})).length <= steiner_length + 1e-9);
}

TEST_CASE("random metric extensions are valid and GH-sum consistent") {
  std::mt19937_64 rng(149);
  for (int round = 0; round < 30; ++round) {
    const auto space = random_space(rng, 3 + round % 3);
    const double cap = 2.0 * diameter(space);
    const auto extended = random_metric_extension(space, 1 + round % 2, cap, rng);
    CHECK(diameter(extended) <= cap + 1e-12);
    // the extension restricted to the original points is the original space
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j)
        CHECK(extended.dist(i, j) == space.dist(i, j));

    const double lambda = 2.0 * cap;
    CHECK(std::abs(mst_length_via_gh(extended, lambda) - mst_length(extended)) <=
          1e-12);
    // any metric extension's mst upper-bounds the minimal filling
    CHECK(mst_length(extended) >= mf(space).length - 1e-9);
  }
}

TEST_CASE("upper-bound search lands on the frozen optima") {
  {
    const double found = mf_upper_bound_search(triangle_345(), {}, 2000, 7);
    CHECK(found >= 6.0 - 1e-9);
    CHECK(found <= 6.0 + 0.05);
  }
  {
    const double found = mf_upper_bound_search(simplex({3, 1.0}), {}, 2000, 7);
    CHECK(found >= 1.5 - 1e-9);
    CHECK(found <= 1.55);
  }
  {
    const auto pair = validate_metric({{0, 0.8}, {0.8, 0}}, {"a", "b"});
    CHECK(mf_upper_bound_search(pair, {}, 50, 3) ==
          doctest::Approx(0.8).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mf_upper_bound_search(triangle_345(), {}, 0, 1), Error);
}

TEST_CASE("search is deterministic in the seed and bounded by mf") {
  std::mt19937_64 rng(151);
  for (int round = 0; round < 5; ++round) {
    const auto space = random_space(rng, 3 + round % 2);
    const double first = mf_upper_bound_search(space, {}, 120, 99);
    const double second = mf_upper_bound_search(space, {}, 120, 99);
    CHECK(first == second);
    CHECK(first >= mf(space).length - 1e-9);
  }
}
