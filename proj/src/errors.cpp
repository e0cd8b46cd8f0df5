#include "ghmst/errors.hpp"

namespace ghmst {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::negative_or_zero_off_diagonal: return "NegativeOrZeroOffDiagonal";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::nonpositive_lambda: return "NonpositiveLambda";
    case Errc::empty_relation: return "EmptyRelation";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::single_block: return "SingleBlock";
    case Errc::invalid_k: return "InvalidK";
    case Errc::lambda_too_small: return "LambdaTooSmall";
    case Errc::invalid_iterations: return "InvalidIterations";
    case Errc::empty_candidate_set: return "EmptyCandidateSet";
    case Errc::lp_numerical_failure: return "LPNumericalFailure";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IOError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

Error::Error(Errc code, const std::string& message,
             std::initializer_list<std::ptrdiff_t> where)
    : Error(code, message) {
  std::size_t slot = 0;
  for (std::ptrdiff_t index : where) {
    if (slot >= where_.size()) break;
    where_[slot++] = index;
  }
}

}  // namespace ghmst
