#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullforge {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  InvalidElement,
  InvalidLevel,
  ZeroElement,
  NotADivisor,
  NoPreimage,
  NotInSubfield,
  MixedFields,
  ShapeMismatch,
  RankDeficient,
  DuplicatePoints,
  ZeroMultiplier,
  InvalidDimension,
  TooLarge,
  DegreeViolation,
  MethodDisagreement,
  PredicateFailed,
  NoScalingElement,
  TheoremMismatch,
  BoundViolated,
  MalformedDescriptor,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hullforge
