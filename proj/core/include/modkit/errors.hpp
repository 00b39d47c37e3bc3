#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modkit {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  NotSquare,
  DomainError,
  BadExponent,
  BadBeta,
  ShapeMismatch,
  DimensionMismatch,
  ZeroVector,
  SingularState,
  NotJFixed,
  NotInCone,
  NotDensityMatrix,
  OrderViolation,
  OutsideStrip,
  NotMonotone,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every contract violation in the library.
/// Callers branch on code(); what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modkit
