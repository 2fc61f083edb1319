/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace attitude {

enum class ErrorCode {
  NotSkew,
  NotOrthogonal,
  ImproperRotation,
  GimbalLock,
  UndefinedAxis,
  Singular180,
  AxisNotUnit,
  NotNormalized,
  ZeroNorm,
  RodriguezUndefined,
  CollinearMeasurements,
  TooFewMeasurements,
  SingularM,
  DenominatorVanishes,
  InconsistentDerivatives,
  IntegrationFailure,
  InvalidArgument,
  ParseError,
  ValidationError,
  IoError,
  UnknownExample,
};

std::string_view to_string(ErrorCode code);

/// Human readable reason attached to singularity codes, e.g. "gimbal lock".
std::string_view reason(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the fixed-step integrators. `cause()` is the code raised by the
/// derivative rule (GimbalLock) or IntegrationFailure itself for overflow.
class IntegrationFailure : public Error {
 public:
  IntegrationFailure(double t, ErrorCode cause, const std::string& what);

  double time() const noexcept { return time_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  double time_;
  ErrorCode cause_;
};

}  // namespace attitude
