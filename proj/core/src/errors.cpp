#include "modkit/errors.hpp"

namespace modkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadBeta: return "BadBeta";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SingularState: return "SingularState";
    case ErrorCode::NotJFixed: return "NotJFixed";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::OutsideStrip: return "OutsideStrip";
    case ErrorCode::NotMonotone: return "NotMonotone";
  }
  return "Unknown";
}

}  // namespace modkit
