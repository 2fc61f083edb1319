/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/error.hpp"

namespace attitude {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::ImproperRotation: return "ImproperRotation";
    case ErrorCode::GimbalLock: return "GimbalLock";
    case ErrorCode::UndefinedAxis: return "UndefinedAxis";
    case ErrorCode::Singular180: return "Singular180";
    case ErrorCode::AxisNotUnit: return "AxisNotUnit";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::RodriguezUndefined: return "RodriguezUndefined";
    case ErrorCode::CollinearMeasurements: return "CollinearMeasurements";
    case ErrorCode::TooFewMeasurements: return "TooFewMeasurements";
    case ErrorCode::SingularM: return "SingularM";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::InconsistentDerivatives: return "InconsistentDerivatives";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

std::string_view reason(ErrorCode code)
{
  switch (code) {
    case ErrorCode::GimbalLock: return "gimbal lock";
    case ErrorCode::Singular180:
    case ErrorCode::RodriguezUndefined: return "180° singularity";
    case ErrorCode::UndefinedAxis: return "undefined axis";
    case ErrorCode::NotOrthogonal: return "matrix is not orthogonal";
    case ErrorCode::ImproperRotation: return "rotation by inversion (det = -1)";
    case ErrorCode::NotNormalized: return "quaternion is not normalized";
    case ErrorCode::AxisNotUnit: return "axis is not a unit vector";
    default: return to_string(code);
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code)
{
}

IntegrationFailure::IntegrationFailure(double t, ErrorCode cause, const std::string& what)
    : Error(ErrorCode::IntegrationFailure, what), time_(t), cause_(cause)
{
}

}  // namespace attitude
