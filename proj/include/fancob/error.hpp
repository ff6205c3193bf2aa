#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fancob {

enum class ErrorKind {
    Overflow,
    ZeroVector,
    DimensionMismatch,
    NullityTooLarge,
    DependentInput,
    NotPrimitive,
    DuplicateRay,
    NotInSupport,
    InvalidFan,
    VerticalRay,
    CenterNotInSupport,
    CenterAlreadyRay,
    NotCollapsible,
    FrontMismatch,
    BrokenFan,
    EqualRays,
    NotAllPointingUp,
    AssertionFailed,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NullityTooLarge: return "NullityTooLarge";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::VerticalRay: return "VerticalRay";
    case ErrorKind::CenterNotInSupport: return "CenterNotInSupport";
    case ErrorKind::CenterAlreadyRay: return "CenterAlreadyRay";
    case ErrorKind::NotCollapsible: return "NotCollapsible";
    case ErrorKind::FrontMismatch: return "FrontMismatch";
    case ErrorKind::BrokenFan: return "BrokenFan";
    case ErrorKind::EqualRays: return "EqualRays";
    case ErrorKind::NotAllPointingUp: return "NotAllPointingUp";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fancob
