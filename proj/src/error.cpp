#include "indcluster/error.hpp"

namespace indcluster {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::NotExchangeable: return "NotExchangeable";
    case ErrorCode::WindowBoundary: return "WindowBoundary";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnstableWindow: return "UnstableWindow";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::DoesNotFitBox: return "DoesNotFitBox";
    case ErrorCode::BoxShrinks: return "BoxShrinks";
    case ErrorCode::NotQuadrilateral: return "NotQuadrilateral";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TruncationUnstable: return "TruncationUnstable";
    case ErrorCode::EmptyCoordinateZero: return "EmptyCoordinateZero";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace indcluster
