#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cd {

enum class ErrorKind {
    LengthMismatch,
    NonFinite,
    LevelMismatch,
    LevelOutOfRange,
    ZeroElement,
    NotPure,
    NoPrincipalDirection,
    NotInSlice,
    OffSlice,
    Overflow,
    NoConvergence,
    OriginOnPath,
    AmbiguousWinding,
    OpenCurve,
    InvalidArgument,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cd
