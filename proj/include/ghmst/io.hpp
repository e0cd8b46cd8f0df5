#pragma once

#include <string>

#include "ghmst/metric_space.hpp"

namespace ghmst {

enum class SpaceFormat { auto_detect, json, csv };

// {"labels": ["a","b"], "matrix": [[0,1],[1,0]]}; labels optional (defaults
// to p1..pn).
FiniteMetricSpace parse_space_json(const std::string& text);

// Optional header row of labels, then a square matrix of decimal numbers.
FiniteMetricSpace parse_space_csv(const std::string& text);

FiniteMetricSpace load_space(const std::string& path,
                             SpaceFormat format = SpaceFormat::auto_detect);

// Content digest of the parsed space (labels + distances), stable under
// whitespace-only changes to the source file.
std::string space_digest(const FiniteMetricSpace& space);

}  // namespace ghmst
