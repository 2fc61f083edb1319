/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <functional>
#include <string>

#include "attitude/error.hpp"
#include "attitude/quaternion.hpp"
#include "attitude/representations.hpp"
#include "attitude/so3.hpp"

namespace attitude {

/// Body-referenced angular velocity, rad/s.
using AngularVelocity = Vec3;
/// Angular velocity as a function of time.
using OmegaProfile = std::function<AngularVelocity(double)>;

inline constexpr double kRodriguezOverflow = 1e6;

struct EulerRateJacobian {
  Mat3 j;
  Mat3 j_inv;
};

/// R [w]x.
Mat3 rotation_derivative(const RotationMatrix& r, const AngularVelocity& omega);
/// R exp([w]x dt). Throws InvalidArgument for dt < 0.
RotationMatrix propagate_rotation_exact(const RotationMatrix& r, const AngularVelocity& omega, double dt);

/// d/dt ||R||_I = vex_pa(R)^T w / 2.
double normalized_distance_rate(const RotationMatrix& r, const AngularVelocity& omega);
/// d/dt vex_pa(B) for B' = B [w]x, that is (Tr(B) I - B)^T w / 2.
Vec3 vex_pa_rate(const Mat3& b, const AngularVelocity& omega);

/// Throws GimbalLock when |cos(pitch)| < 1e-7.
EulerRateJacobian euler_rate_jacobian(const EulerAngles& xi);
Vec3 euler_rate(const EulerAngles& xi, const AngularVelocity& omega);

/// (I + [rho]x + rho rho^T) w / 2.
Vec3 rodriguez_derivative(const RodriguezVector& rho, const AngularVelocity& omega);

/// Gamma(w) Q / 2.
Quat4 quaternion_derivative(const UnitQuaternion& q, const AngularVelocity& omega);
/// (cos(|w| dt/2) I + sin(|w| dt/2)/|w| Gamma(w)) Q. Throws InvalidArgument for dt < 0.
UnitQuaternion propagate_quaternion_exact(const UnitQuaternion& q, const AngularVelocity& omega, double dt);

/// Fourth-order commutator-free Magnus step for time-varying w, built from two
/// exact constant-rate steps with w sampled at the Gauss-Legendre nodes.
RotationMatrix propagate_rotation_magnus4(const RotationMatrix& r, const OmegaProfile& omega, double t,
                                          double dt);
UnitQuaternion propagate_quaternion_magnus4(const UnitQuaternion& q, const OmegaProfile& omega, double t,
                                            double dt);
/// D with Q(t + dt) = Q(t) (1 + D) under the same Magnus step. dt may be
/// negative. Computed without forming 1 + D.
Quat4 magnus4_increment(const OmegaProfile& omega, double t, double dt);

/// Classical fourth-order Runge-Kutta step of y' = f(t, y).
///
/// Errors raised by the rule are rethrown as IntegrationFailure stamped with t.
template <class State, class Rule>
State rk4_step(const State& y, double t, double dt, Rule&& f)
{
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rk4 step size must be positive");
  }
  try {
    const double h = 0.5 * dt;
    const State k1 = f(t, y);
    const State k2 = f(t + h, State(y + h * k1));
    const State k3 = f(t + h, State(y + h * k2));
    const State k4 = f(t + dt, State(y + dt * k3));
    return State(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  catch (const IntegrationFailure&) {
    throw;
  }
  catch (const Error& e) {
    throw IntegrationFailure(t, e.code(), std::string(e.what()) + " at t = " + std::to_string(t));
  }
}

EulerAngles euler_rk4_step(const EulerAngles& xi, const OmegaProfile& omega, double t, double dt);
/// Throws IntegrationFailure when |rho| > 1e6 or the state is not finite.
RodriguezVector rodriguez_rk4_step(const RodriguezVector& rho, const OmegaProfile& omega, double t,
                                   double dt);
/// Renormalizes after the step.
UnitQuaternion quaternion_rk4_step(const UnitQuaternion& q, const OmegaProfile& omega, double t,
                                   double dt);

/// Vector part of 2 (Q* (x) Q'' + Q' (x) Q'*).
///
/// Throws InconsistentDerivatives when the scalar part exceeds 1e-6.
Vec3 rotational_acceleration(const Quat4& q, const Quat4& qdot, const Quat4& qddot);

/// R~ = R^T R*.
RotationMatrix attitude_error(const RotationMatrix& r, const RotationMatrix& r_star);
/// -[w]x R~ + R~ [w*]x.
Mat3 attitude_error_derivative(const RotationMatrix& err, const AngularVelocity& omega,
                               const AngularVelocity& omega_star);

/// Q~ = Q*^-1 (x) Q.
UnitQuaternion quaternion_error(const UnitQuaternion& q, const UnitQuaternion& q_star);
/// Psi(Q~) [0, w~] / 2 with w~ = w - R(Q~)^T w*.
Quat4 quaternion_error_derivative(const UnitQuaternion& q_err, const AngularVelocity& omega,
                                  const AngularVelocity& omega_star);
/// [q~^T (w* - w); q~0 (w - w*) + [q~]x (w* + w)] / 2.
Quat4 quaternion_error_derivative_expanded(const UnitQuaternion& q_err, const AngularVelocity& omega,
                                           const AngularVelocity& omega_star);

/// -(I + [rho~]x + rho~ rho~^T) R* beta / 2, for the error R~ = R R*^T.
Vec3 rodriguez_error_derivative(const RodriguezVector& rho_err, const RotationMatrix& r_star,
                                const Vec3& beta);

}  // namespace attitude
