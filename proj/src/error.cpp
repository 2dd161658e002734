#include "sepcol/error.hpp"

namespace sepcol {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorKind::DuplicateNeighbour: return "DuplicateNeighbour";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorKind::UnknownOuterFace: return "UnknownOuterFace";
    case ErrorKind::WalkNotCycle: return "WalkNotCycle";
    case ErrorKind::NotACutVertex: return "NotACutVertex";
    case ErrorKind::NotAChord: return "NotAChord";
    case ErrorKind::MissingItem: return "MissingItem";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::MissingList: return "MissingList";
    case ErrorKind::MatchingOnNonEdge: return "MatchingOnNonEdge";
    case ErrorKind::PinNotInList: return "PinNotInList";
    case ErrorKind::PartialColouring: return "PartialColouring";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::DoesNotHitAllOffensiveTriangles: return "DoesNotHitAllOffensiveTriangles";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConsistencyError: return "ConsistencyError";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
  }
  return "Unknown";
}

}  // namespace sepcol
