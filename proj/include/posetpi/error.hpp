#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetpi {

enum class ErrorCode {
  UnknownElement,
  DuplicateElement,
  DuplicateEdge,
  CycleDetected,
  NonGradedCover,
  TransitiveEdge,
  NotComparable,
  NotMinimal,
  InvalidComplex,
  AlphabetMismatch,
  Exhausted,
  GroupTooLarge,
  NotAChainComplex,
  DimensionMismatch,
  NoAssignment,
  NotSimplicial,
  PathNotInPoset,
  InvalidCycle,
  Disconnected,
  NotAForest,
  NotAnAutomorphism,
  WrongHeight,
  YNotSimplyConnected,
  ParseError,
  Cancelled,
  InternalCheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace posetpi
