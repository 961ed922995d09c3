#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aconvex {

enum class ErrorCode {
  InvalidArgument,
  ZeroVector,
  OppositeVectors,
  NotSimple,
  NotCCW,
  DegenerateArea,
  StartsNotAligned,
  RotationsDiffer,
  AcoPreconditionViolated,
  TagMismatch,
  GeneralPositionFailed,
  NotGeneralPosition,
  LoopRotationTooNegative,
  NotConvex,
  PointInsidePolygon,
  SearchExhausted,
  ParseError,
  InternalInconsistency,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code; the
// message is a human-readable detail line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace aconvex
