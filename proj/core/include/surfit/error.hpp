#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfit {

enum class ErrorCode {
    domain_error,            // non-finite input or invalid distribution parameters
    invalid_argument,        // precondition violated by the caller
    insufficient_data,       // too few samples / records
    degenerate_fit,          // zero-spread data, flat curves
    monotonicity_violation,  // SUR curve increases somewhere
    unreachable_percentile,  // p% JND / p% SUR not attained on 1..N
    range_error,             // level or index outside the admissible range
    undefined_correlation,   // zero variance in a PLCC argument
    training_failure,        // non-finite loss during training
    parse_error,             // malformed file contents
    validation_error,        // well-formed file that violates an invariant
    io_error,                // file could not be opened / written
    missing_data,            // features or curves absent for required keys
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace surfit
