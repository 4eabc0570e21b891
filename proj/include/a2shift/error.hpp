#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace a2 {

enum class ErrorCode {
  NotPrimePower,
  UnsupportedOrder,
  SyntaxError,
  UnknownPoint,
  ArityError,
  OrderTooLarge,
  NotWallAdjacent,
  DimensionMismatch,
  DNotReachable,
  InfeasibleExhaustive,
  IoError,
  VersionUnsupported,
  KindMismatch,
  NoPath,
  NoMeet,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every recoverable failure in the library; the
// code identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace a2
