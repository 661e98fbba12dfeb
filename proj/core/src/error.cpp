#include "surfit/error.hpp"

namespace surfit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain_error: return "domain_error";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::insufficient_data: return "insufficient_data";
        case ErrorCode::degenerate_fit: return "degenerate_fit";
        case ErrorCode::monotonicity_violation: return "monotonicity_violation";
        case ErrorCode::unreachable_percentile: return "unreachable_percentile";
        case ErrorCode::range_error: return "range_error";
        case ErrorCode::undefined_correlation: return "undefined_correlation";
        case ErrorCode::training_failure: return "training_failure";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::validation_error: return "validation_error";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::missing_data: return "missing_data";
    }
    return "unknown";
}

}  // namespace surfit
