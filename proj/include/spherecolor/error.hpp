#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spherecolor {

enum class ErrorKind {
  ParseError,
  UnknownElement,
  DuplicateElement,
  RankSkip,
  MinimalRankNonzero,
  DuplicateCover,
  SelfCover,
  RankOutOfRange,
  RankMismatch,
  NotACover,
  ElementReused,
  CyclicMatching,
  NotATree,
  UnknownRoot,
  DimensionMismatch,
  RankTooSmall,
  PreconditionFailed,
  IncompleteColoring,
  TooLarge,
  NotSimple,
  Disconnected,
  BadRotation,
  EulerViolation,
  CotreeNotTree,
  InvalidInput,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::RankSkip: return "RankSkip";
    case ErrorKind::MinimalRankNonzero: return "MinimalRankNonzero";
    case ErrorKind::DuplicateCover: return "DuplicateCover";
    case ErrorKind::SelfCover: return "SelfCover";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::ElementReused: return "ElementReused";
    case ErrorKind::CyclicMatching: return "CyclicMatching";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::CotreeNotTree: return "CotreeNotTree";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and machine-readable,
/// `what()` carries the offending ids.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spherecolor
