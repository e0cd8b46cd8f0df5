#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghmst/limits.hpp"
#include "ghmst/metric_space.hpp"

namespace ghmst {

struct CheckRecord {
  std::string name;
  std::vector<double> lhs;  // scalar checks use a single element
  std::vector<double> rhs;
  bool scalar = true;
  double abs_diff = 0.0;
  bool pass = false;
};

// Cross-checks every identity the library exposes on one space: the spectrum
// by all three routes, closed-form simplex distances against exact search,
// the extra-simplex value, the mst GH-sum, spectra equality across all
// minimum spanning trees, and the scaling homothety at lambda = 2.
// Degenerate inputs pass vacuously. lambda defaults to 2*diam (1.0 for a
// one-point space).
std::vector<CheckRecord> verify_space(const FiniteMetricSpace& space,
                                      std::optional<double> lambda = {},
                                      const Limits& limits = {});

bool all_pass(const std::vector<CheckRecord>& checks);

}  // namespace ghmst
