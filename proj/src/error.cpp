#include "posetpi/error.hpp"

namespace posetpi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NonGradedCover: return "NonGradedCover";
    case ErrorCode::TransitiveEdge: return "TransitiveEdge";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotAChainComplex: return "NotAChainComplex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoAssignment: return "NoAssignment";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::PathNotInPoset: return "PathNotInPoset";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::WrongHeight: return "WrongHeight";
    case ErrorCode::YNotSimplyConnected: return "YNotSimplyConnected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace posetpi
