#include "valcone/errors.hpp"

namespace valcone {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalSatelliteTarget: return "IllegalSatelliteTarget";
    case ErrorCode::LineThroughSatellite: return "LineThroughSatellite";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::InvalidContactSequence: return "InvalidContactSequence";
    case ErrorCode::InconsistentLineContact: return "InconsistentLineContact";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotNonPositive: return "NotNonPositive";
    case ErrorCode::NonPositiveDelta: return "NonPositiveDelta";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::ZeroGerm: return "ZeroGerm";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotInGamma: return "NotInGamma";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "UnknownError";
}

}  // namespace valcone
