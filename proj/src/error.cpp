#include "aconvex/error.hpp"

namespace aconvex {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::OppositeVectors: return "OppositeVectors";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotCCW: return "NotCCW";
    case ErrorCode::DegenerateArea: return "DegenerateArea";
    case ErrorCode::StartsNotAligned: return "StartsNotAligned";
    case ErrorCode::RotationsDiffer: return "RotationsDiffer";
    case ErrorCode::AcoPreconditionViolated: return "AcoPreconditionViolated";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::GeneralPositionFailed: return "GeneralPositionFailed";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::LoopRotationTooNegative: return "LoopRotationTooNegative";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::PointInsidePolygon: return "PointInsidePolygon";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": " + detail),
      line_(line),
      column_(column) {}

}  // namespace aconvex
