#pragma once

#include <stdexcept>
#include <string>

namespace indcluster {

enum class ErrorCode {
  NotDivisible,
  DivisionByZero,
  ZeroToNegativePower,
  MissingValue,
  ParseError,
  InvalidSeed,
  NotExchangeable,
  WindowBoundary,
  SearchTooLarge,
  NotSkewSymmetric,
  IndexOutOfRange,
  UnstableWindow,
  LiftFailed,
  DoesNotFitBox,
  BoxShrinks,
  NotQuadrilateral,
  SearchExhausted,
  SizeMismatch,
  RankDeficient,
  TruncationUnstable,
  EmptyCoordinateZero,
  NonPositiveInput,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace indcluster
