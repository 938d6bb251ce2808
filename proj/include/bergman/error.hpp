#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

enum class ErrorCode {
    DimensionMismatch,
    DomainError,
    InvalidArgument,
    NonConvergence,
    NonTraceClass,
    SingularSample,
    QuadratureBudget,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::NonTraceClass: return "NonTraceClass";
        case ErrorCode::SingularSample: return "SingularSample";
        case ErrorCode::QuadratureBudget: return "QuadratureBudget";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Structured error. `detail` holds machine-readable context (a number,
/// an offending point, a residual) that the CLI serializes alongside code
/// and message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string detail = {})
        : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace bergman
