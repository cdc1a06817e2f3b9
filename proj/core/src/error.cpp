#include "hullforge/error.hpp"

namespace hullforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
    case ErrorCode::PredicateFailed: return "PredicateFailed";
    case ErrorCode::NoScalingElement: return "NoScalingElement";
    case ErrorCode::TheoremMismatch: return "TheoremMismatch";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::MalformedDescriptor: return "MalformedDescriptor";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hullforge
