#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghmst/errors.hpp"
#include "ghmst/filling.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/io.hpp"
#include "ghmst/partitions.hpp"
#include "ghmst/spanning.hpp"
#include "ghmst/steiner.hpp"
#include "ghmst/verify.hpp"

namespace {

using nlohmann::json;

int exit_code_for(ghmst::Errc code) {
  switch (code) {
    case ghmst::Errc::not_symmetric:
    case ghmst::Errc::negative_or_zero_off_diagonal:
    case ghmst::Errc::nonzero_diagonal:
    case ghmst::Errc::triangle_violation:
    case ghmst::Errc::dimension_mismatch:
      return 2;
    case ghmst::Errc::size_limit_exceeded:
      return 3;
    case ghmst::Errc::parse_error:
    case ghmst::Errc::io_error:
      return 5;
    default:
      return 4;
  }
}

struct Options {
  bool pretty = false;
  int threads = 0;  // 0 = machine parallelism; modules are pure either way
  std::string format = "auto";
  ghmst::Limits limits = ghmst::Limits::from_env();
};

ghmst::SpaceFormat format_of(const std::string& name) {
  if (name == "json") return ghmst::SpaceFormat::json;
  if (name == "csv") return ghmst::SpaceFormat::csv;
  return ghmst::SpaceFormat::auto_detect;
}

json tree_payload(const ghmst::FiniteMetricSpace& space, const ghmst::WeightedTree& tree) {
  json edges = json::array();
  for (const ghmst::WeightedEdge& edge : tree.edges) {
    edges.push_back({{"u", space.labels()[edge.u]},
                     {"v", space.labels()[edge.v]},
                     {"length", edge.length}});
  }
  return {{"edges", std::move(edges)}, {"length", tree.total_length}};
}

json witness_payload(const ghmst::FiniteMetricSpace& a, const ghmst::FiniteMetricSpace& b,
                     const ghmst::Correspondence& witness) {
  json pairs = json::array();
  for (const auto& [i, j] : witness.pairs)
    pairs.push_back({a.labels()[i], b.labels()[j]});
  return pairs;
}

json checks_payload(const std::vector<ghmst::CheckRecord>& checks) {
  json out = json::array();
  for (const ghmst::CheckRecord& record : checks) {
    json lhs = record.scalar ? json(record.lhs.at(0)) : json(record.lhs);
    json rhs = record.scalar ? json(record.rhs.at(0)) : json(record.rhs);
    out.push_back({{"name", record.name},
                   {"lhs", std::move(lhs)},
                   {"rhs", std::move(rhs)},
                   {"abs_diff", record.abs_diff},
                   {"pass", record.pass}});
  }
  return out;
}

void emit(const Options& options, const std::string& command,
          const std::string& digest, json payload,
          std::optional<std::string> method,
          std::chrono::steady_clock::time_point started) {
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                started)
          .count();
  json report{{"command", command},
              {"input_digest", digest},
              {"payload", std::move(payload)},
              {"timing_ms", elapsed_ms}};
  if (method) report["method"] = *method;
  std::cout << report.dump(options.pretty ? 2 : -1) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"mst spectra, Gromov-Hausdorff distances, Steiner trees and minimal "
               "fillings of finite metric spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  Options options;
  app.add_flag("--pretty", options.pretty, "indent the JSON report");
  app.add_option("--threads", options.threads, "worker threads (results are identical for any value)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-exhaustive", options.limits.max_exhaustive_product,
                 "cap on |X|*|Y| for exhaustive GH search")
      ->envname("GHMST_MAX_EXHAUSTIVE");
  std::size_t max_n = options.limits.max_bnb_n;
  app.add_option("--max-n", max_n, "cap on space size for exact enumeration")
      ->envname("GHMST_MAX_N");

  std::string format = "auto";
  app.add_option("--format", format, "space file format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check the metric axioms");
  std::string validate_path;
  cmd_validate->add_option("space", validate_path)->required();

  // mst
  auto* cmd_mst = app.add_subcommand("mst", "minimum spanning tree, length, spectrum");
  std::string mst_path;
  cmd_mst->add_option("space", mst_path)->required();

  // spectrum
  auto* cmd_spectrum = app.add_subcommand("spectrum", "mst-spectrum by a chosen route");
  std::string spectrum_path;
  std::string spectrum_method = "mst";
  double spectrum_lambda = 0.0;
  cmd_spectrum->add_option("space", spectrum_path)->required();
  cmd_spectrum->add_option("--method", spectrum_method)
      ->check(CLI::IsMember({"mst", "partitions", "gh"}));
  auto* spectrum_lambda_opt = cmd_spectrum->add_option("--lambda", spectrum_lambda);

  // gh
  auto* cmd_gh = app.add_subcommand("gh", "exact Gromov-Hausdorff distance");
  std::string gh_path_a, gh_path_b;
  std::string gh_algorithm = "auto";
  cmd_gh->add_option("spaceA", gh_path_a)->required();
  cmd_gh->add_option("spaceB", gh_path_b)->required();
  cmd_gh->add_option("--algorithm", gh_algorithm)
      ->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));

  // gh-simplex
  auto* cmd_ghs = app.add_subcommand("gh-simplex", "distance to a simplex");
  std::string ghs_path;
  std::size_t ghs_m = 0;
  double ghs_lambda = 0.0;
  bool ghs_check = false;
  cmd_ghs->add_option("space", ghs_path)->required();
  cmd_ghs->add_option("--m", ghs_m)->required();
  auto* ghs_lambda_opt = cmd_ghs->add_option("--lambda", ghs_lambda);
  cmd_ghs->add_flag("--check", ghs_check,
                    "re-verify the closed form against exact search");

  // smt
  auto* cmd_smt = app.add_subcommand("smt", "Steiner minimal tree length");
  std::string smt_path, smt_terminals;
  std::string smt_method = "enumerate";
  double smt_d = 0.0, smt_lambda = 0.0;
  cmd_smt->add_option("space", smt_path)->required();
  cmd_smt->add_option("--terminals", smt_terminals, "comma-separated labels")->required();
  auto* smt_d_opt = cmd_smt->add_option("--d", smt_d);
  auto* smt_lambda_opt = cmd_smt->add_option("--lambda", smt_lambda);
  cmd_smt->add_option("--method", smt_method)
      ->check(CLI::IsMember({"enumerate", "gh-sum"}));

  // mf
  auto* cmd_mf = app.add_subcommand("mf", "minimal filling length");
  std::string mf_path;
  std::string mf_method = "lp";
  std::size_t mf_iterations = 2000;
  std::uint64_t mf_seed = 0;
  cmd_mf->add_option("space", mf_path)->required();
  cmd_mf->add_option("--method", mf_method)->check(CLI::IsMember({"lp", "search"}));
  cmd_mf->add_option("--iterations", mf_iterations);
  cmd_mf->add_option("--seed", mf_seed);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run every cross-check on one space");
  std::string verify_path;
  double verify_lambda = 0.0;
  cmd_verify->add_option("space", verify_path)->required();
  auto* verify_lambda_opt = cmd_verify->add_option("--lambda", verify_lambda);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    json record{
        {"error", {{"code", "UsageError"}, {"message", e.what()}, {"exit", 4}}}};
    std::cerr << record.dump() << "\n";
    return 4;
  }
  options.format = format;
  options.limits.max_bnb_n = max_n;
  options.limits.max_tree_enumeration_n = max_n;

  const auto started = std::chrono::steady_clock::now();
  auto load = [&options](const std::string& path) {
    return ghmst::load_space(path, format_of(options.format));
  };

  if (cmd_validate->parsed()) {
    const auto space = load(validate_path);
    emit(options, "validate", ghmst::space_digest(space),
         {{"valid", true},
          {"n", space.size()},
          {"labels", space.labels()},
          {"diameter", ghmst::diameter(space)}},
         std::nullopt, started);
    return 0;
  }
  if (cmd_mst->parsed()) {
    const auto space = load(mst_path);
    const auto tree = ghmst::minimum_spanning_tree(space);
    json payload = tree_payload(space, tree);
    payload["spectrum"] = ghmst::mst_spectrum(space).values;
    emit(options, "mst", ghmst::space_digest(space), std::move(payload), std::nullopt,
         started);
    return 0;
  }
  if (cmd_spectrum->parsed()) {
    const auto space = load(spectrum_path);
    std::vector<double> values;
    if (spectrum_method == "mst") {
      values = ghmst::mst_spectrum(space).values;
    } else if (spectrum_method == "partitions") {
      for (std::size_t k = 1; k < space.size(); ++k)
        values.push_back(ghmst::spectrum_via_partitions(space, k, options.limits));
    } else {
      const double lambda = spectrum_lambda_opt->count() != 0
                                ? spectrum_lambda
                                : 2.0 * ghmst::diameter(space);
      values = ghmst::spectrum_via_gh(space, lambda, options.limits).values;
    }
    emit(options, "spectrum", ghmst::space_digest(space), {{"spectrum", values}},
         spectrum_method, started);
    return 0;
  }
  if (cmd_gh->parsed()) {
    const auto a = load(gh_path_a);
    const auto b = load(gh_path_b);
    ghmst::GHResult result =
        gh_algorithm == "auto"
            ? ghmst::gh_exact_auto(a, b, options.limits)
            : ghmst::gh_exact(a, b,
                              gh_algorithm == "exhaustive"
                                  ? ghmst::GHAlgorithm::exhaustive
                                  : ghmst::GHAlgorithm::branch_and_bound,
                              options.limits);
    json payload{{"distance", result.distance},
                 {"nodes_explored", result.nodes_explored}};
    if (result.witness) payload["witness"] = witness_payload(a, b, *result.witness);
    emit(options, "gh", ghmst::space_digest(a) + "+" + ghmst::space_digest(b),
         std::move(payload), std::string(ghmst::gh_method_name(result.method)), started);
    return 0;
  }
  if (cmd_ghs->parsed()) {
    const auto space = load(ghs_path);
    const double lambda = ghs_lambda_opt->count() != 0
                              ? ghs_lambda
                              : 2.0 * ghmst::diameter(space);
    const auto result = ghmst::gh_to_simplex(space, ghs_m, lambda, options.limits);
    json payload{{"distance", result.distance},
                 {"m", ghs_m},
                 {"lambda", lambda}};
    if (ghs_check) {
      const auto exact = ghmst::gh_exact_auto(space, ghmst::simplex({ghs_m, lambda}),
                                              options.limits);
      payload["check"] = {{"distance", exact.distance},
                          {"method", ghmst::gh_method_name(exact.method)},
                          {"abs_diff", std::abs(exact.distance - result.distance)},
                          {"pass", std::abs(exact.distance - result.distance) <= 1e-12}};
    }
    emit(options, "gh-simplex", ghmst::space_digest(space), std::move(payload),
         std::string(ghmst::gh_method_name(result.method)), started);
    return 0;
  }
  if (cmd_smt->parsed()) {
    const auto space = load(smt_path);
    std::vector<std::size_t> terminals;
    {
      std::stringstream stream(smt_terminals);
      std::string label;
      while (std::getline(stream, label, ',')) terminals.push_back(space.index_of(label));
    }
    const auto instance = ghmst::make_steiner_instance(space, std::move(terminals));
    std::optional<double> d, lambda;
    if (smt_d_opt->count() != 0) d = smt_d;
    if (smt_lambda_opt->count() != 0) lambda = smt_lambda;
    json payload;
    if (smt_method == "enumerate") {
      const auto result = ghmst::smt_finite_ambient(instance);
      payload = {{"length", result.length},
                 {"vertices", result.space.labels()},
                 {"tree", tree_payload(result.space, result.tree)}};
    } else {
      payload = {{"length", ghmst::smt_via_gh(instance, d, lambda, options.limits)}};
    }
    emit(options, "smt", ghmst::space_digest(space), std::move(payload), smt_method,
         started);
    return 0;
  }
  if (cmd_mf->parsed()) {
    const auto space = load(mf_path);
    json payload;
    if (mf_method == "lp") {
      const auto result = ghmst::mf(space, options.limits);
      json edges = json::array();
      for (const auto& [u, v] : result.topology.edges) edges.push_back({u, v});
      payload = {{"length", result.length},
                 {"topology", {{"leaf_count", result.topology.leaf_count},
                               {"internal_count", result.topology.internal_count},
                               {"edges", std::move(edges)}}},
                 {"weights", result.weights}};
    } else {
      payload = {{"length", ghmst::mf_upper_bound_search(space, std::nullopt,
                                                         mf_iterations, mf_seed)},
                 {"iterations", mf_iterations},
                 {"seed", mf_seed}};
    }
    emit(options, "mf", ghmst::space_digest(space), std::move(payload), mf_method,
         started);
    return 0;
  }
  if (cmd_verify->parsed()) {
    const auto space = load(verify_path);
    std::optional<double> lambda;
    if (verify_lambda_opt->count() != 0) lambda = verify_lambda;
    const auto checks = ghmst::verify_space(space, lambda, options.limits);
    emit(options, "verify", ghmst::space_digest(space),
         {{"checks", checks_payload(checks)}, {"all_pass", ghmst::all_pass(checks)}},
         std::nullopt, started);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ghmst::Error& error) {
    const int code = exit_code_for(error.code());
    json record{{"error", {{"code", ghmst::errc_name(error.code())},
                           {"message", error.what()},
                           {"exit", code}}}};
    std::cerr << record.dump() << "\n";
    return code;
  } catch (const std::exception& error) {
    json record{{"error", {{"code", "Internal"}, {"message", error.what()}, {"exit", 1}}}};
    std::cerr << record.dump() << "\n";
    return 1;
  }
}
