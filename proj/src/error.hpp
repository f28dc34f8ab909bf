#ifndef FOXH_ERROR_HPP
#define FOXH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace foxh {

// Error categories raised by the core. Kept in one enum so the C API can map
// them to stable integer codes.
enum class ErrorCode {
  // parameter specs
  index_out_of_range,
  non_positive_weight,
  no_separating_contour,
  // gamma kernel
  pole_at_non_positive_integer,
  pole_at_integer,
  pole_at_half_integer,
  pole_in_factor,
  pole_of_numerator,
  // evaluation
  outside_convergence_sector,
  budget_exceeded,
  logarithmic_case,
  series_diverged,
  overflow,
  // identity harness
  invalid_params,
  spec_validation_failed,
  empty_admissible_region,
  pole_at_s,
  // i/o and glue
  parse_error,
  invalid_argument,
  unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::non_positive_weight: return "NonPositiveWeight";
    case ErrorCode::no_separating_contour: return "NoSeparatingContour";
    case ErrorCode::pole_at_non_positive_integer: return "PoleAtNonPositiveInteger";
    case ErrorCode::pole_at_integer: return "PoleAtInteger";
    case ErrorCode::pole_at_half_integer: return "PoleAtHalfInteger";
    case ErrorCode::pole_in_factor: return "PoleInFactor";
    case ErrorCode::pole_of_numerator: return "PoleOfNumerator";
    case ErrorCode::outside_convergence_sector: return "OutsideConvergenceSector";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::logarithmic_case: return "LogarithmicCase";
    case ErrorCode::series_diverged: return "SeriesDiverged";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::invalid_params: return "InvalidParams";
    case ErrorCode::spec_validation_failed: return "SpecValidationFailed";
    case ErrorCode::empty_admissible_region: return "EmptyAdmissibleRegion";
    case ErrorCode::pole_at_s: return "PoleAtS";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::unsupported: return "Unsupported";
  }
  return "UnknownError";
}

}  // namespace foxh

#endif
