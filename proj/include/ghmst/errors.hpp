#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghmst {

// Every failure the library reports. The CLI maps these onto its exit codes:
// metric-validation codes -> 2, size limits -> 3, precondition violations -> 4,
// parse/io -> 5.
enum class Errc {
  not_symmetric,
  negative_or_zero_off_diagonal,
  nonzero_diagonal,
  triangle_violation,
  dimension_mismatch,

  size_limit_exceeded,

  empty_subset,
  nonpositive_lambda,
  empty_relation,
  index_out_of_range,
  single_block,
  invalid_k,
  lambda_too_small,
  invalid_iterations,
  empty_candidate_set,
  lp_numerical_failure,

  parse_error,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  // `where` holds the witnessing indices, e.g. {i, j, k} for a triangle
  // violation; unused slots stay -1.
  Error(Errc code, const std::string& message,
        std::initializer_list<std::ptrdiff_t> where);

  Errc code() const noexcept { return code_; }
  const std::array<std::ptrdiff_t, 3>& where() const noexcept { return where_; }

 private:
  Errc code_;
  std::array<std::ptrdiff_t, 3> where_{-1, -1, -1};
};

}  // namespace ghmst
