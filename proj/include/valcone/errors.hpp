#pragma once

#include <stdexcept>
#include <string>

namespace valcone {

enum class ErrorCode {
  IllegalSatelliteTarget,
  LineThroughSatellite,
  BadLength,
  InvalidContactSequence,
  InconsistentLineContact,
  DimensionMismatch,
  NonPositiveDegree,
  NegativeMultiplicity,
  NotRegular,
  NotNonPositive,
  NonPositiveDelta,
  PreconditionViolated,
  FieldTooSmall,
  ZeroGerm,
  ZeroPolynomial,
  NotInGamma,
  ParseError,
  Unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace valcone
