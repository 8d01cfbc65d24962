#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusforge {

enum class ErrorCode {
    ParseError,
    ValidationError,
    GradingError,
    DimensionMismatch,
    IrrationalSpectrum,
    NotNilpotent,
    NotAnIdeal,
    NotDerivation,
    NotCommuting,
    NotTriangular,
    JacobiFailure,
    WrongKind,
    DimensionGuard,
    ZeroTorus,
    InconsistentCorrection,
    PreconditionFailed,
    Usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace torusforge
