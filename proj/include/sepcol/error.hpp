#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepcol {

enum class ErrorKind {
  AsymmetricRotation,
  DuplicateNeighbour,
  SelfLoop,
  UnknownVertex,
  NotPlanarEmbedding,
  UnknownOuterFace,
  WalkNotCycle,
  NotACutVertex,
  NotAChord,
  MissingItem,
  UnknownFace,
  MissingList,
  MatchingOnNonEdge,
  PinNotInList,
  PartialColouring,
  LimitExceeded,
  HypothesisViolated,
  InternalContradiction,
  NotAClique,
  DoesNotHitAllOffensiveTriangles,
  BadParameters,
  VerificationFailed,
  ParseError,
  ConsistencyError,
  RetriesExhausted,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepcol
