#include "hnnsa/error.hpp"

namespace hnnsa {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::invalid_size: return "invalid size";
    case ErrorCode::invalid_tour: return "invalid tour";
    case ErrorCode::invalid_matrix: return "invalid matrix";
    case ErrorCode::degenerate_instance: return "degenerate instance";
    case ErrorCode::enumeration_too_large: return "enumeration too large";
    case ErrorCode::invalid_temperature: return "invalid temperature";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::io_error: return "i/o error";
    }
    return "unknown error";
}

const char* to_string(MatrixViolation violation) noexcept {
    switch (violation) {
    case MatrixViolation::non_binary: return "non-binary entry";
    case MatrixViolation::count: return "count";
    case MatrixViolation::row: return "row";
    case MatrixViolation::column: return "column";
    }
    return "unknown";
}

}  // namespace hnnsa
