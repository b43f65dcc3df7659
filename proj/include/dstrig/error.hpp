#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dstrig {

enum class ErrorCode {
  NonFinite,
  ZeroVector,
  NotUnit,
  NullInput,
  NullSpan,
  NotTimeLike,
  DegeneratePair,
  NotSpaceLikePosition,
  NotOnQuadric,
  NullTangent,
  CoincidentPoints,
  UnsupportedKind,
  DegenerateTriangle,
  ImpossibleEdge,
  NullEdge,
  NotSpatiolateral,
  BoundaryCase,
  NoPolarTriangle,
  NotApplicable,
  NonContractible,
  UnsupportedTriangleType,
  NonConvergent,
  DegenerateFan,
  ExhaustedAttempts,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NullInput: return "NullInput";
    case ErrorCode::NullSpan: return "NullSpan";
    case ErrorCode::NotTimeLike: return "NotTimeLike";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotSpaceLikePosition: return "NotSpaceLikePosition";
    case ErrorCode::NotOnQuadric: return "NotOnQuadric";
    case ErrorCode::NullTangent: return "NullTangent";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::ImpossibleEdge: return "ImpossibleEdge";
    case ErrorCode::NullEdge: return "NullEdge";
    case ErrorCode::NotSpatiolateral: return "NotSpatiolateral";
    case ErrorCode::BoundaryCase: return "BoundaryCase";
    case ErrorCode::NoPolarTriangle: return "NoPolarTriangle";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NonContractible: return "NonContractible";
    case ErrorCode::UnsupportedTriangleType: return "UnsupportedTriangleType";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::DegenerateFan: return "DegenerateFan";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the
/// code identifies the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dstrig
