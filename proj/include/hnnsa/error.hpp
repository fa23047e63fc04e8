#pragma once

#include <stdexcept>
#include <string>

namespace hnnsa {

enum class ErrorCode {
    invalid_argument = 1,
    invalid_size,
    invalid_tour,
    invalid_matrix,
    degenerate_instance,
    enumeration_too_large,
    invalid_temperature,
    parse_error,
    io_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Which permutation-matrix condition a tour matrix broke.
enum class MatrixViolation { non_binary, count, row, column };

const char* to_string(MatrixViolation violation) noexcept;

class InvalidTourMatrix : public Error {
public:
    InvalidTourMatrix(MatrixViolation violation, const std::string& what)
        : Error(ErrorCode::invalid_matrix, what), violation_(violation) {}

    MatrixViolation violation() const noexcept { return violation_; }

private:
    MatrixViolation violation_;
};

}  // namespace hnnsa
