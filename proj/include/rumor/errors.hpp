#pragma once

#include <stdexcept>
#include <string>

namespace rumor {

/// Machine-checkable reason attached to every library error.
enum class ErrorCode {
  nonpositive_rate,        // lambda or alpha not strictly positive
  fraction_out_of_range,   // a probability/fraction outside its range
  sum_not_one,             // initial fractions do not sum to 1
  group_inconsistency,     // x10 + y10 > theta or x20 > 1 - theta
  infeasible_rounding,     // discretization cannot satisfy group counts
  absorbed_state,          // operation undefined once Y1 = 0
  domain_violation,        // argument outside a function's domain
  bracket_failure,         // root bracketing/refinement did not converge
  quadrature_failure,      // adaptive quadrature hit the subdivision cap
  singular_matrix,         // matrix inverse required but not available
  missing_data,            // per-run records were not retained
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::nonpositive_rate: return "nonpositive_rate";
    case ErrorCode::fraction_out_of_range: return "fraction_out_of_range";
    case ErrorCode::sum_not_one: return "sum_not_one";
    case ErrorCode::group_inconsistency: return "group_inconsistency";
    case ErrorCode::infeasible_rounding: return "infeasible_rounding";
    case ErrorCode::absorbed_state: return "absorbed_state";
    case ErrorCode::domain_violation: return "domain_violation";
    case ErrorCode::bracket_failure: return "bracket_failure";
    case ErrorCode::quadrature_failure: return "quadrature_failure";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::missing_data: return "missing_data";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Violated input contract (bad parameters, states, preconditions).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An algorithm failed to reach its stated tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace rumor
