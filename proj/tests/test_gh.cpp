#include <doctest.h>

#include <cmath>
#include <random>

#include "ghmst/errors.hpp"
#include "ghmst/gh.hpp"
#include "support/test_spaces.hpp"

using namespace ghmst;
using testsupport::random_space;
using testsupport::rescale_to_diameter;
using testsupport::w4;

namespace {

Correspondence identity_on(const FiniteMetricSpace& space) {
  Correspondence rel;
  for (std::size_t i = 0; i < space.size(); ++i) rel.pairs.emplace_back(i, i);
  return rel;
}

void check_witness(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                   const GHResult& result) {
  REQUIRE(result.witness.has_value());
  const Correspondence& witness = *result.witness;
  REQUIRE(!witness.pairs.empty());
  std::vector<bool> on_x(x.size(), false), on_y(y.size(), false);
  for (const auto& [i, j] : witness.pairs) {
    on_x[i] = true;
    on_y[j] = true;
  }
  for (bool covered : on_x) CHECK(covered);
  for (bool covered : on_y) CHECK(covered);
  CHECK(std::abs(distortion(x, y, witness.pairs) - 2.0 * result.distance) <= 1e-12);
}

}  // namespace

TEST_CASE("distortion") {
  const auto space = w4();
  CHECK(distortion(space, space, identity_on(space).pairs) == 0.0);

  const auto delta3 = simplex({3, 1.0});
  std::vector<std::pair<std::size_t, std::size_t>> full;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < delta3.size(); ++j) full.emplace_back(i, j);
  CHECK(distortion(space, delta3, full) ==
        doctest::Approx(std::max(diameter(space), 1.0)).epsilon(1e-15));

  const auto x = validate_metric({{0, 0.1}, {0.1, 0}}, {"p1", "p2"});
  const auto y = validate_metric({{0, 0.3}, {0.3, 0}}, {"q1", "q2"});
  CHECK(distortion(x, y, {{0, 0}, {1, 1}}) == doctest::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(distortion(x, y, {}), Error);
  CHECK_THROWS_AS(distortion(x, y, {{0, 5}}), Error);
}

TEST_CASE("gh_exact on frozen examples") {
  const auto space = w4();
  for (GHAlgorithm algorithm :
       {GHAlgorithm::exhaustive, GHAlgorithm::branch_and_bound}) {
    const GHResult self = gh_exact(space, space, algorithm);
    CHECK(self.distance == 0.0);
    check_witness(space, space, self);

    // one-point space vs W4: the only correspondence is the full relation
    const GHResult point = gh_exact(simplex({1, 1.0}), space, algorithm);
    CHECK(point.distance == doctest::Approx(0.225).epsilon(1e-15));
    check_witness(simplex({1, 1.0}), space, point);

    const GHResult simplices =
        gh_exact(simplex({2, 1.0}), simplex({3, 1.0}), algorithm);
    CHECK(simplices.distance == doctest::Approx(0.5).epsilon(1e-15));
    check_witness(simplex({2, 1.0}), simplex({3, 1.0}), simplices);
  }
}

TEST_CASE("branch and bound agrees with exhaustive search") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 30; ++round) {
    const auto x = random_space(rng, 2 + round % 3);
    const auto y = random_space(rng, 2 + (round / 3) % 3);
    const GHResult brute = gh_exact(x, y, GHAlgorithm::exhaustive);
    const GHResult pruned = gh_exact(x, y, GHAlgorithm::branch_and_bound);
    CHECK(std::abs(brute.distance - pruned.distance) <= 1e-12);
    check_witness(x, y, brute);
    check_witness(x, y, pruned);
    CHECK(brute.method == GHMethod::exhaustive);
    CHECK(pruned.method == GHMethod::branch_and_bound);
  }
}

TEST_CASE("gh_exact is symmetric, obeys the triangle inequality and the diameter bound") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 12; ++round) {
    const auto x = random_space(rng, 2 + round % 3);
    const auto y = random_space(rng, 2 + (round + 1) % 3);
    const auto z = random_space(rng, 2 + (round + 2) % 3);
    const double xy = gh_exact_auto(x, y).distance;
    const double yx = gh_exact_auto(y, x).distance;
    const double yz = gh_exact_auto(y, z).distance;
    const double xz = gh_exact_auto(x, z).distance;
    CHECK(std::abs(xy - yx) <= 1e-12);
    CHECK(xz <= xy + yz + 1e-12);
    CHECK(xy + 1e-15 >= std::abs(diameter(x) - diameter(y)) / 2.0);
  }
}

TEST_CASE("size limits are hard errors") {
  std::mt19937_64 rng(67);
  const auto big = random_space(rng, 6);
  const auto other = random_space(rng, 5);
  try {
    gh_exact(big, other, GHAlgorithm::exhaustive);  // product 30 > 24
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::size_limit_exceeded);
  }
  CHECK_THROWS_AS(gh_exact(big, other, GHAlgorithm::branch_and_bound,
                           Limits{.max_bnb_n = 5}),
                  Error);
  CHECK_THROWS_AS(gh_exact_auto(big, other, Limits{.max_exhaustive_product = 24,
                                                   .max_bnb_n = 4}),
                  Error);
}

TEST_CASE("gh_scaled_pair realizes the homothety") {
  const auto delta2 = simplex({2, 1.0});
  const auto delta3 = simplex({3, 1.0});
  const auto [same_a, same_b] = gh_scaled_pair(delta2, delta3, 1.0);
  CHECK(same_a == same_b);

  const auto [two_a, two_b] = gh_scaled_pair(delta2, delta3, 2.0);
  CHECK(two_a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two_b == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937_64 rng(71);
  for (double lambda : {0.5, 2.0, 7.0}) {
    const auto x = random_space(rng, 3);
    const auto y = random_space(rng, 4);
    const auto [scaled, direct] = gh_scaled_pair(x, y, lambda);
    CHECK(std::abs(scaled - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
  CHECK_THROWS_AS(gh_scaled_pair(delta2, delta3, 0.0), Error);
}

TEST_CASE("gh_to_simplex prefers closed forms and records the method") {
  const auto space = w4();

  const GHResult spectral = gh_to_simplex(space, 2, 1.0);
  CHECK(spectral.distance == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(spectral.method == GHMethod::closed_form);
  const GHResult confirm = gh_exact(space, simplex({2, 1.0}), GHAlgorithm::exhaustive);
  CHECK(std::abs(confirm.distance - spectral.distance) <= 1e-12);

  const GHResult beyond = gh_to_simplex(space, 5, 1.0);
  CHECK(beyond.distance == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(beyond.method == GHMethod::closed_form);
  const GHResult beyond_exact =
      gh_exact(space, simplex({5, 1.0}), GHAlgorithm::exhaustive);
  CHECK(std::abs(beyond_exact.distance - beyond.distance) <= 1e-12);

  const GHResult point = gh_to_simplex(space, 1, 0.125);
  CHECK(point.distance == doctest::Approx(0.225).epsilon(1e-15));
  CHECK(point.witness.has_value());

  // lambda below 2*diam: the closed form does not apply, the result must
  // come from exact search
  const GHResult fallback = gh_to_simplex(space, 3, 0.5);
  CHECK(fallback.method == GHMethod::branch_and_bound);
  const GHResult fallback_exact =
      gh_exact(space, simplex({3, 0.5}), GHAlgorithm::exhaustive);
  CHECK(std::abs(fallback.distance - fallback_exact.distance) <= 1e-12);

  // lambda exactly 2*diam is inside the closed-form regime
  CHECK(gh_to_simplex(space, 2, 0.9).method == GHMethod::closed_form);

  CHECK_THROWS_AS(gh_to_simplex(space, 0, 1.0), Error);
  CHECK_THROWS_AS(gh_to_simplex(space, 2, -1.0), Error);
}

TEST_CASE("distance to large simplices is lambda/2 under the diameter hypothesis") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 8; ++round) {
    const std::size_t n = 2 + round % 3;
    const auto space = random_space(rng, n);
    for (std::size_t m : {n + 1, n + 2}) {
      for (double factor : {2.0, 3.0}) {
        const double lambda = factor * diameter(space);
        const GHResult exact = gh_exact_auto(space, simplex({m, lambda}));
        CHECK(std::abs(exact.distance - lambda / 2.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("closed form equals exact search for small-diameter spaces") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + round % 4;
    const auto space = rescale_to_diameter(random_space(rng, n), 0.49);
    const Spectrum spectrum = mst_spectrum(space);
    for (std::size_t k = 1; k < n; ++k) {
      const auto target = simplex({k + 1, 1.0});
      const GHResult pruned = gh_exact(space, target, GHAlgorithm::branch_and_bound);
      CHECK(std::abs(pruned.distance - (1.0 - spectrum.values[k - 1]) / 2.0) <= 1e-12);
      // in this regime every optimal witness relates each point of the space
      // to exactly one simplex vertex
      REQUIRE(pruned.witness.has_value());
      CHECK(pruned.witness->max_multiplicity_first() == 1);
      if (space.size() * target.size() <= 24) {
        const GHResult brute = gh_exact(space, target, GHAlgorithm::exhaustive);
        CHECK(std::abs(brute.distance - pruned.distance) <= 1e-12);
        CHECK(brute.witness->max_multiplicity_first() == 1);
      }
    }
  }
}

TEST_CASE("spectrum_via_gh") {
  {
    const auto via_gh = spectrum_via_gh(w4(), 1.0).values;
    const auto direct = mst_spectrum(w4()).values;
    REQUIRE(via_gh.size() == direct.size());
    for (std::size_t i = 0; i < via_gh.size(); ++i)
      CHECK(std::abs(via_gh[i] - direct[i]) <= 1e-12);
  }
  const auto pair = validate_metric({{0, 0.35}, {0.35, 0}}, {"a", "b"});
  CHECK(spectrum_via_gh(pair, 0.7).values[0] == doctest::Approx(0.35).epsilon(1e-13));
  const auto spread = spectrum_via_gh(simplex({4, 0.3}), 1.0);
  for (double value : spread.values) CHECK(value == doctest::Approx(0.3).epsilon(1e-13));

  try {
    spectrum_via_gh(w4(), 0.5);
    FAIL("expected LambdaTooSmall");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::lambda_too_small);
  }

  std::mt19937_64 rng(83);
  for (int round = 0; round < 10; ++round) {
    const std::size_t n = 2 + round % 4;
    const auto space = random_space(rng, n);
    for (double lambda :
         {2.0 * diameter(space), 3.0 * diameter(space), 10.0}) {
      const auto via_gh = spectrum_via_gh(space, lambda).values;
      const auto direct = mst_spectrum(space).values;
      REQUIRE(via_gh.size() == direct.size());
      for (std::size_t i = 0; i < via_gh.size(); ++i)
        CHECK(std::abs(via_gh[i] - direct[i]) <= 1e-12);
    }
  }
}

TEST_CASE("mst_length_via_gh") {
  CHECK(std::abs(mst_length_via_gh(w4(), 1.0) - 0.45) <= 1e-12);
  CHECK(mst_length_via_gh(simplex({1, 1.0}), 5.0) == 0.0);
  CHECK(std::abs(mst_length_via_gh(simplex({3, 1.0}), 2.0) - 2.0) <= 1e-12);
  CHECK_THROWS_AS(mst_length_via_gh(w4(), 0.2), Error);

  std::mt19937_64 rng(89);
  for (int round = 0; round < 10; ++round) {
    const auto space = random_space(rng, 2 + round % 5);
    const double lambda = 2.0 * diameter(space);
    CHECK(std::abs(mst_length_via_gh(space, lambda) - mst_length(space)) <= 1e-12);
  }
}
