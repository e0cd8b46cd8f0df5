#include <doctest.h>

#include <cmath>
#include <random>

#include "ghmst/errors.hpp"
#include "ghmst/filling.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/steiner.hpp"
#include "support/test_spaces.hpp"

using namespace ghmst;
using testsupport::random_space;
using testsupport::y5;

namespace {

SteinerInstance y5_instance(double arm) {
  auto space = y5(arm);
  return make_steiner_instance(space, {0, 1, 2});
}

}  // namespace

TEST_CASE("instance construction validates terminals") {
  std::mt19937_64 rng(97);
  const auto space = random_space(rng, 4);
  CHECK_THROWS_AS(make_steiner_instance(space, {}), Error);
  CHECK_THROWS_AS(make_steiner_instance(space, {0, 0}), Error);
  CHECK_THROWS_AS(make_steiner_instance(space, {7}), Error);
  const auto instance = make_steiner_instance(space, {3, 1});
  CHECK(instance.terminals == std::vector<std::size_t>{1, 3});
}

TEST_CASE("enumerate_supersets counts and order") {
  std::mt19937_64 rng(101);
  {
    const auto space = random_space(rng, 3);
    const auto instance = make_steiner_instance(space, {0, 1, 2});
    CHECK(enumerate_supersets(instance).size() == 1);  // X = M
  }
  {
    const auto space = random_space(rng, 4);
    const auto instance = make_steiner_instance(space, {0, 1, 2});
    const auto candidates = enumerate_supersets(instance);
    REQUIRE(candidates.size() == 2);
    CHECK(candidates[0].size() == 3);
    CHECK(candidates[1].size() == 4);
  }
  {
    const auto space = random_space(rng, 6);
    const auto instance = make_steiner_instance(space, {0, 2, 4});
    const auto candidates = enumerate_supersets(instance);
    CHECK(candidates.size() == 4);  // 1 + C(3,1)
  }
  {
    // a diameter cap keeps only the candidates it admits
    const auto instance = y5_instance(0.6);
    CHECK(enumerate_supersets(instance, 1.0).size() == 2);
    CHECK(enumerate_supersets(instance, 0.5).empty());
  }
  {
    // one-point terminal sets admit no extra vertices
    const auto space = random_space(rng, 5);
    const auto instance = make_steiner_instance(space, {2});
    const auto candidates = enumerate_supersets(instance);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].size() == 1);
  }
}

TEST_CASE("smt by enumeration on the hub instances") {
  {
    const auto result = smt_finite_ambient(y5_instance(0.6));
    CHECK(result.length == doctest::Approx(1.8).epsilon(1e-14));
    CHECK(result.space.size() == 4);  // the hub pays off
    CHECK(result.tree.edges.size() == 3);
  }
  {
    const auto result = smt_finite_ambient(y5_instance(0.7));
    CHECK(result.length == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(result.space.size() == 3);  // 2.1 > 2: terminals alone win
  }
  {
    std::mt19937_64 rng(103);
    const auto space = random_space(rng, 4);
    std::vector<std::size_t> all{0, 1, 2, 3};
    const auto instance = make_steiner_instance(space, all);
    const auto result = smt_finite_ambient(instance);
    CHECK(result.length == doctest::Approx(mst_length(space)).epsilon(1e-14));
  }
}

TEST_CASE("smt via GH sums matches enumeration") {
  CHECK(std::abs(smt_via_gh(y5_instance(0.6)) - 1.8) <= 1e-12);
  CHECK(std::abs(smt_via_gh(y5_instance(0.7)) - 2.0) <= 1e-12);
  CHECK(std::abs(smt_via_gh(y5_instance(0.6), 1.9, 3.8) - 1.8) <= 1e-12);

  std::mt19937_64 rng(107);
  for (int round = 0; round < 25; ++round) {
    const std::size_t ambient_size = 4 + round % 4;  // up to 7
    const auto space = random_space(rng, ambient_size);
    const std::size_t terminal_count = 2 + round % 3;  // up to 4
    std::vector<std::size_t> terminals;
    for (std::size_t v = 0; v < terminal_count; ++v) terminals.push_back(v);
    const auto instance = make_steiner_instance(space, std::move(terminals));

    const auto enumerated = smt_finite_ambient(instance);
    CHECK(std::abs(smt_via_gh(instance) - enumerated.length) <= 1e-12);

    const double d = static_cast<double>(terminal_count) *
                     diameter(subspace(space, instance.terminals)) * 1.5 + 0.1;
    CHECK(std::abs(smt_via_gh(instance, d, 2.0 * d) - enumerated.length) <= 1e-12);
    CHECK(std::abs(smt_via_gh(instance, d, 3.0 * d) - enumerated.length) <= 1e-12);

    // V = M is always a candidate
    CHECK(enumerated.length <=
          mst_length(subspace(space, instance.terminals)) + 1e-12);
  }
}

TEST_CASE("smt precondition errors") {
  const auto instance = y5_instance(0.6);
  try {
    smt_via_gh(instance, 2.0, 1.0);  // lambda below 2d
    FAIL("expected LambdaTooSmall");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::lambda_too_small);
  }
  try {
    smt_via_gh(instance, 0.25, 0.5);  // cap below every candidate diameter
    FAIL("expected EmptyCandidateSet");
  } catch (const Error& error) {
    CHECK(error.code() == Errc::empty_candidate_set);
  }
}

TEST_CASE("adding ambient points can only shorten the Steiner tree") {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 10; ++round) {
    const auto space = random_space(rng, 4);
    const auto instance = make_steiner_instance(space, {0, 1, 2});
    const double before = smt_finite_ambient(instance).length;

    const auto larger = random_metric_extension(space, 2, 2.0 * diameter(space), rng);
    const auto richer = make_steiner_instance(larger, {0, 1, 2});
    const double after = smt_finite_ambient(richer).length;
    CHECK(after <= before + 1e-12);
  }
}

TEST_CASE("every GH-sum term is nonnegative when lambda >= 2*diam") {
  std::mt19937_64 rng(113);
  const auto space = random_space(rng, 5);
  const double lambda = 2.0 * diameter(space);
  for (std::size_t k = 1; k < space.size(); ++k) {
    const double term = lambda - 2.0 * gh_to_simplex(space, k + 1, lambda).distance;
    CHECK(term >= -1e-12);
  }
}

TEST_CASE("degenerate single-terminal instance") {
  std::mt19937_64 rng(127);
  const auto space = random_space(rng, 3);
  const auto instance = make_steiner_instance(space, {1});
  CHECK(smt_finite_ambient(instance).length == 0.0);
  CHECK(smt_via_gh(instance) == 0.0);
}
