#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ghmst/errors.hpp"
#include "ghmst/filling.hpp"
#include "ghmst/gh.hpp"
#include "ghmst/io.hpp"
#include "ghmst/partitions.hpp"
#include "ghmst/spanning.hpp"
#include "ghmst/steiner.hpp"
#include "ghmst/verify.hpp"

namespace py = pybind11;

namespace {

using namespace ghmst;

py::dict tree_dict(const FiniteMetricSpace& space, const WeightedTree& tree) {
  py::list edges;
  for (const WeightedEdge& edge : tree.edges)
    edges.append(py::make_tuple(space.labels()[edge.u], space.labels()[edge.v],
                                edge.length));
  py::dict out;
  out["edges"] = std::move(edges);
  out["length"] = tree.total_length;
  return out;
}

py::dict gh_dict(const GHResult& result, const FiniteMetricSpace& a,
                 const FiniteMetricSpace& b) {
  py::dict out;
  out["distance"] = result.distance;
  out["method"] = gh_method_name(result.method);
  out["nodes_explored"] = result.nodes_explored;
  if (result.witness) {
    py::list pairs;
    for (const auto& [i, j] : result.witness->pairs)
      pairs.append(py::make_tuple(a.labels()[i], b.labels()[j]));
    out["witness"] = std::move(pairs);
  }
  return out;
}

GHAlgorithm algorithm_of(const std::string& name) {
  if (name == "exhaustive") return GHAlgorithm::exhaustive;
  if (name == "bnb" || name == "branch_and_bound") return GHAlgorithm::branch_and_bound;
  throw Error(Errc::invalid_k, "unknown algorithm '" + name + "'");
}

SteinerInstance instance_of(const FiniteMetricSpace& space,
                            const std::vector<std::string>& terminals) {
  std::vector<std::size_t> indices;
  indices.reserve(terminals.size());
  for (const std::string& label : terminals) indices.push_back(space.index_of(label));
  return make_steiner_instance(space, std::move(indices));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mst spectra, Gromov-Hausdorff distances, Steiner trees and minimal "
            "fillings of finite metric spaces";

  py::register_exception<Error>(m, "Error");

  py::class_<FiniteMetricSpace>(m, "FiniteMetricSpace")
      .def(py::init([](std::vector<std::string> labels,
                       std::vector<std::vector<double>> matrix) {
             return validate_metric(matrix, std::move(labels));
           }),
           py::arg("labels"), py::arg("matrix"))
      .def_property_readonly("labels", &FiniteMetricSpace::labels)
      .def_property_readonly("size", &FiniteMetricSpace::size)
      .def("matrix", &FiniteMetricSpace::matrix)
      .def("dist", &FiniteMetricSpace::dist, py::arg("i"), py::arg("j"))
      .def("diameter", [](const FiniteMetricSpace& space) { return diameter(space); })
      .def("scale",
           [](const FiniteMetricSpace& space, double lambda) {
             return scale(space, lambda);
           },
           py::arg("lam"))
      .def("__len__", &FiniteMetricSpace::size)
      .def("__repr__", [](const FiniteMetricSpace& space) {
        return "FiniteMetricSpace(" + std::to_string(space.size()) + " points)";
      });

  m.def("simplex",
        [](std::size_t n, double lam) { return simplex({n, lam}); },
        py::arg("n"), py::arg("lam") = 1.0);
  m.def("load_space",
        [](const std::string& path) { return load_space(path); },
        py::arg("path"));
  m.def("space_digest", &space_digest, py::arg("space"));
  m.def("set_distance",
        [](const FiniteMetricSpace& space, const std::vector<std::size_t>& a,
           const std::vector<std::size_t>& b) { return set_distance(space, a, b); },
        py::arg("space"), py::arg("a"), py::arg("b"));
  m.def("hausdorff_distance",
        [](const FiniteMetricSpace& space, const std::vector<std::size_t>& a,
           const std::vector<std::size_t>& b) {
          return hausdorff_distance(space, a, b);
        },
        py::arg("space"), py::arg("a"), py::arg("b"));
  m.def("subspace",
        [](const FiniteMetricSpace& space, const std::vector<std::size_t>& indices) {
          return subspace(space, indices);
        },
        py::arg("space"), py::arg("indices"));
  m.def("distortion",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b,
           const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
          return distortion(a, b, rel);
        },
        py::arg("a"), py::arg("b"), py::arg("rel"));
  m.def("gh_scaled_pair",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b, double lam) {
          return gh_scaled_pair(a, b, lam);
        },
        py::arg("a"), py::arg("b"), py::arg("lam"));

  m.def("mst",
        [](const FiniteMetricSpace& space) {
          py::dict out = tree_dict(space, minimum_spanning_tree(space));
          out["spectrum"] = mst_spectrum(space).values;
          return out;
        },
        py::arg("space"));
  m.def("mst_length",
        [](const FiniteMetricSpace& space) { return mst_length(space); },
        py::arg("space"));
  m.def("mst_spectrum",
        [](const FiniteMetricSpace& space) { return mst_spectrum(space).values; },
        py::arg("space"));

  m.def("spectrum_via_partitions",
        [](const FiniteMetricSpace& space) {
          std::vector<double> values;
          for (std::size_t k = 1; k < space.size(); ++k)
            values.push_back(spectrum_via_partitions(space, k));
          return values;
        },
        py::arg("space"));
  m.def("alpha",
        [](const FiniteMetricSpace& space,
           const std::vector<std::vector<std::size_t>>& blocks) {
          return alpha(space, Partition{blocks});
        },
        py::arg("space"), py::arg("blocks"));

  m.def("gh_exact",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b,
           const std::string& algorithm) {
          const GHResult result = algorithm == "auto"
                                      ? gh_exact_auto(a, b)
                                      : gh_exact(a, b, algorithm_of(algorithm));
          return gh_dict(result, a, b);
        },
        py::arg("a"), py::arg("b"), py::arg("algorithm") = "auto");
  m.def("gh_to_simplex",
        [](const FiniteMetricSpace& space, std::size_t m_points, double lam) {
          const GHResult result = gh_to_simplex(space, m_points, lam);
          return gh_dict(result, space, simplex({m_points, lam}));
        },
        py::arg("space"), py::arg("m"), py::arg("lam"));
  m.def("spectrum_via_gh",
        [](const FiniteMetricSpace& space, double lam) {
          return spectrum_via_gh(space, lam).values;
        },
        py::arg("space"), py::arg("lam"));
  m.def("mst_length_via_gh",
        [](const FiniteMetricSpace& space, double lam) {
          return mst_length_via_gh(space, lam);
        },
        py::arg("space"), py::arg("lam"));

  m.def("smt",
        [](const FiniteMetricSpace& space, const std::vector<std::string>& terminals) {
          const SmtResult result = smt_finite_ambient(instance_of(space, terminals));
          py::dict out;
          out["length"] = result.length;
          out["vertices"] = result.space.labels();
          out["tree"] = tree_dict(result.space, result.tree);
          return out;
        },
        py::arg("space"), py::arg("terminals"));
  m.def("smt_via_gh",
        [](const FiniteMetricSpace& space, const std::vector<std::string>& terminals,
           std::optional<double> d, std::optional<double> lam) {
          return smt_via_gh(instance_of(space, terminals), d, lam);
        },
        py::arg("space"), py::arg("terminals"), py::arg("d") = py::none(),
        py::arg("lam") = py::none());

  m.def("mf",
        [](const FiniteMetricSpace& space) {
          const MfResult result = mf(space);
          py::list edges;
          for (const auto& [u, v] : result.topology.edges)
            edges.append(py::make_tuple(u, v));
          py::dict out;
          out["length"] = result.length;
          out["weights"] = result.weights;
          out["topology_edges"] = std::move(edges);
          return out;
        },
        py::arg("space"));
  m.def("mf_upper_bound_search",
        [](const FiniteMetricSpace& space, std::size_t iterations, std::uint64_t seed,
           std::optional<double> d) {
          return mf_upper_bound_search(space, d, iterations, seed);
        },
        py::arg("space"), py::arg("iterations") = 2000, py::arg("seed") = 0,
        py::arg("d") = py::none());

  m.def("verify_space",
        [](const FiniteMetricSpace& space, std::optional<double> lam) {
          py::list out;
          for (const CheckRecord& record : verify_space(space, lam)) {
            py::dict check;
            check["name"] = record.name;
            if (record.scalar) {
              check["lhs"] = record.lhs.at(0);
              check["rhs"] = record.rhs.at(0);
            } else {
              check["lhs"] = record.lhs;
              check["rhs"] = record.rhs;
            }
            check["abs_diff"] = record.abs_diff;
            check["pass"] = record.pass;
            out.append(std::move(check));
          }
          return out;
        },
        py::arg("space"), py::arg("lam") = py::none());
}
