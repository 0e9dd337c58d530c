#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace elast {

/// Failure categories raised by the library. Every throw site uses one of
/// these codes so callers (and the CLI) can map failures without parsing text.
enum class ErrorCode {
    EmptyInput,
    ZeroGenerator,
    NonCoprime,
    GeneratorTooLarge,
    TableTooLarge,
    NotInMonoid,
    EnumerationLimit,
    NoSubcollection,
    InvalidParams,
    SOutOfRange,
    InvalidTuple,
    NonIntegerResult,
    InvalidInput,
    NotArithmetical,
    NotApplicable,
    IncompatibleParams,
    SingleGenerator,
    IndexOutOfRange,
    Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::NonCoprime: return "NonCoprime";
        case ErrorCode::GeneratorTooLarge: return "GeneratorTooLarge";
        case ErrorCode::TableTooLarge: return "TableTooLarge";
        case ErrorCode::NotInMonoid: return "NotInMonoid";
        case ErrorCode::EnumerationLimit: return "EnumerationLimit";
        case ErrorCode::NoSubcollection: return "NoSubcollection";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::SOutOfRange: return "SOutOfRange";
        case ErrorCode::InvalidTuple: return "InvalidTuple";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotArithmetical: return "NotArithmetical";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::IncompatibleParams: return "IncompatibleParams";
        case ErrorCode::SingleGenerator: return "SingleGenerator";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace elast
