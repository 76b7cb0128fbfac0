#pragma once

#include <stdexcept>
#include <string>

namespace minmod {

enum class ErrorCode {
    InvalidInput,
    NotHermitian,
    EmptySubspace,
    NotPositive,
    Singular,
    DuplicateValue,
    NonMonotoneTail,
    NegativeValueInPositiveMode,
    NotBoundedlyInvertible,
    DimensionMismatch,
    ContractionRequired,
    NotReducing,
    StaleCertificate,
    PositivityRequired,
    UnvalidatedSpec,
    NonPositiveWeight,
    DegenerateBoundary,
    KTooLarge,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace minmod
