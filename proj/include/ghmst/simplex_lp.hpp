#pragma once

#include <vector>

namespace ghmst {

// Dense tableau simplex for the small linear programs this project needs:
//   max c'x  subject to  Ax <= b, x >= 0,  with b >= 0
// so the slack basis is immediately feasible. Bland's rule for both the
// entering and the leaving variable, which rules out cycling.
struct SimplexResult {
  double objective = 0.0;
  std::vector<double> x;      // primal solution
  std::vector<double> duals;  // one shadow price per constraint
};

SimplexResult simplex_max_canonical(const std::vector<std::vector<double>>& a,
                                    const std::vector<double>& b,
                                    const std::vector<double>& c);

}  // namespace ghmst
