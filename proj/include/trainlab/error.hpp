#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trainlab {

enum class ErrorCode {
  MalformedConfig,
  ZeroRow,
  ZeroColumn,
  NegativeEntry,
  TruncTooSmall,
  AlphaExceedsTrunc,
  ConfigMismatch,
  TruncExceeded,
  MalformedDiagram,
  SourceTargetMismatch,
  NBelowBound,
  WrongShape,
  WrongKind,
  DimensionMismatch,
  DimensionCap,
  SupportExceedsWindow,
  InvalidRepParams,
  NotClosed,
  LambdaNonzero,
  NotPSD,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trainlab
