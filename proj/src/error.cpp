#include "a2shift/error.hpp"

namespace a2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotWallAdjacent: return "NotWallAdjacent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DNotReachable: return "DNotReachable";
    case ErrorCode::InfeasibleExhaustive: return "InfeasibleExhaustive";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace a2
