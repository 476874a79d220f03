#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowq {

enum class ErrorKind {
    RankDeficient,
    NoSolution,
    ZeroVector,
    DimensionMismatch,
    NotSurjective,
    OutsideSupport,
    NotAHyperplane,
    DegenerateRay,
    HypothesisViolated,
    ScaleExceeded,
    NotInSpan,
    NotHomogeneous,
    ShapeMismatch,
    NotOnTropical,
    InconsistentDiagram,
    DegenerateNewton,
    CertificateFailed,
    InvalidWeights,
    InvalidFan,
    ParseError,
    InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace chowq
