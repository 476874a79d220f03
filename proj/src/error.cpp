#include "chowq/error.hpp"

namespace chowq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::OutsideSupport: return "OutsideSupport";
        case ErrorKind::NotAHyperplane: return "NotAHyperplane";
        case ErrorKind::DegenerateRay: return "DegenerateRay";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::ScaleExceeded: return "ScaleExceeded";
        case ErrorKind::NotInSpan: return "NotInSpan";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotOnTropical: return "NotOnTropical";
        case ErrorKind::InconsistentDiagram: return "InconsistentDiagram";
        case ErrorKind::DegenerateNewton: return "DegenerateNewton";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::InvalidWeights: return "InvalidWeights";
        case ErrorKind::InvalidFan: return "InvalidFan";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace chowq
