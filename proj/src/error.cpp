#include "ordproj/error.hpp"

namespace ordproj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotProjection: return "NotProjection";
    case ErrorKind::NotPartialSymmetry: return "NotPartialSymmetry";
    case ErrorKind::NotPartialIsometry: return "NotPartialIsometry";
    case ErrorKind::NotPartialUnitary: return "NotPartialUnitary";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::NotSubEquivalent: return "NotSubEquivalent";
    case ErrorKind::NotUnitarilyEquivalent: return "NotUnitarilyEquivalent";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotInfinite: return "NotInfinite";
    case ErrorKind::ZeroProjection: return "ZeroProjection";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ordproj
