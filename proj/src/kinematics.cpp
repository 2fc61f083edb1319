/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/kinematics.hpp"

#include <cmath>
#include <sstream>

namespace attitude {

namespace {

void require_non_negative(double dt)
{
  if (!(dt >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "time step must be non-negative");
  }
}

/* Commutator-free Magnus coefficients, Gauss nodes c = 1/2 -+ sqrt(3)/6. */
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kC1 = 0.5 - kSqrt3 / 6.0;
constexpr double kC2 = 0.5 + kSqrt3 / 6.0;
constexpr double kA1 = 0.25 - kSqrt3 / 6.0;
constexpr double kA2 = 0.25 + kSqrt3 / 6.0;

}  // namespace

Mat3 rotation_derivative(const RotationMatrix& r, const AngularVelocity& omega)
{
  return r.matrix() * skew(omega).matrix();
}

RotationMatrix propagate_rotation_exact(const RotationMatrix& r, const AngularVelocity& omega, double dt)
{
  require_non_negative(dt);
  return r * so3_exp(omega * dt);
}

double normalized_distance_rate(const RotationMatrix& r, const AngularVelocity& omega)
{
  return 0.5 * vex_pa(r).dot(omega);
}

Vec3 vex_pa_rate(const Mat3& b, const AngularVelocity& omega)
{
  return 0.5 * (b.trace() * Mat3::Identity() - b).transpose() * omega;
}

EulerRateJacobian euler_rate_jacobian(const EulerAngles& xi)
{
  const double cf = std::cos(xi.roll), sf = std::sin(xi.roll);
  const double ct = std::cos(xi.pitch), st = std::sin(xi.pitch);
  if (std::abs(ct) < kGimbalLockThreshold) {
    throw Error(ErrorCode::GimbalLock, "gimbal lock: Euler rate undefined at pitch +/-90 deg");
  }
  const double tt = st / ct;
  const double sec = 1.0 / ct;
  EulerRateJacobian out;
  out.j << 1.0, sf * tt, cf * tt,
           0.0, cf, -sf,
           0.0, sf * sec, cf * sec;
  out.j_inv << 1.0, 0.0, -st,
               0.0, cf, sf * ct,
               0.0, -sf, cf * ct;
  return out;
}

Vec3 euler_rate(const EulerAngles& xi, const AngularVelocity& omega)
{
  return euler_rate_jacobian(xi).j * omega;
}

Vec3 rodriguez_derivative(const RodriguezVector& rho, const AngularVelocity& omega)
{
  const Vec3& p = rho.rho;
  return 0.5 * (omega + p.cross(omega) + p * p.dot(omega));
}

Quat4 quaternion_derivative(const UnitQuaternion& q, const AngularVelocity& omega)
{
  return 0.5 * Quat4::from_vector(gamma_matrix(omega) * q.as_vector());
}

UnitQuaternion propagate_quaternion_exact(const UnitQuaternion& q, const AngularVelocity& omega, double dt)
{
  require_non_negative(dt);
  const double w = omega.norm();
  const double h = 0.5 * w * dt;
  double c, s;
  if (h < 1e-8) {
    c = 1.0 - 0.5 * h * h;
    s = 0.5 * dt * (1.0 - h * h / 6.0);
  }
  else {
    c = std::cos(h);
    s = std::sin(h) / w;
  }
  const Vec4 x = c * q.as_vector() + s * (gamma_matrix(omega) * q.as_vector());
  return UnitQuaternion::unchecked(Quat4::from_vector(x));
}

RotationMatrix propagate_rotation_magnus4(const RotationMatrix& r, const OmegaProfile& omega, double t,
                                          double dt)
{
  const Vec3 w1 = omega(t + kC1 * dt);
  const Vec3 w2 = omega(t + kC2 * dt);
  const RotationMatrix r1 = propagate_rotation_exact(r, kA2 * w1 + kA1 * w2, dt);
  return propagate_rotation_exact(r1, kA1 * w1 + kA2 * w2, dt);
}

UnitQuaternion propagate_quaternion_magnus4(const UnitQuaternion& q, const OmegaProfile& omega, double t,
                                            double dt)
{
  const Vec3 w1 = omega(t + kC1 * dt);
  const Vec3 w2 = omega(t + kC2 * dt);
  const UnitQuaternion q1 = propagate_quaternion_exact(q, kA2 * w1 + kA1 * w2, dt);
  return propagate_quaternion_exact(q1, kA1 * w1 + kA2 * w2, dt);
}

namespace {

/// exp(w dt / 2) - 1 as a quaternion.
Quat4 half_angle_increment(const Vec3& w, double dt)
{
  const double n = w.norm();
  const double a = 0.5 * n * dt;
  if (n == 0.0) {
    return Quat4();
  }
  const double s = std::sin(0.5 * a);
  return Quat4(-2.0 * s * s, std::sin(a) / n * w);
}

}  // namespace

Quat4 magnus4_increment(const OmegaProfile& omega, double t, double dt)
{
  const Vec3 w1 = omega(t + kC1 * dt);
  const Vec3 w2 = omega(t + kC2 * dt);
  const Quat4 d1 = half_angle_increment(kA2 * w1 + kA1 * w2, dt);
  const Quat4 d2 = half_angle_increment(kA1 * w1 + kA2 * w2, dt);
  return d1 + d2 + qmul(d1, d2);
}

EulerAngles euler_rk4_step(const EulerAngles& xi, const OmegaProfile& omega, double t, double dt)
{
  const Vec3 y = rk4_step(xi.as_vector(), t, dt, [&](double s, const Vec3& x) -> Vec3 {
    return euler_rate(EulerAngles::from_vector(x), omega(s));
  });
  if (!y.allFinite()) {
    throw IntegrationFailure(t, ErrorCode::IntegrationFailure, "Euler angle state is not finite");
  }
  return EulerAngles::from_vector(y);
}

RodriguezVector rodriguez_rk4_step(const RodriguezVector& rho, const OmegaProfile& omega, double t,
                                   double dt)
{
  const Vec3 y = rk4_step(rho.rho, t, dt, [&](double s, const Vec3& x) -> Vec3 {
    return rodriguez_derivative(RodriguezVector{x}, omega(s));
  });
  if (!y.allFinite() || y.norm() > kRodriguezOverflow) {
    std::ostringstream os;
    os << "Rodriguez vector overflow at t = " << t;
    throw IntegrationFailure(t, ErrorCode::IntegrationFailure, os.str());
  }
  return {y};
}

UnitQuaternion quaternion_rk4_step(const UnitQuaternion& q, const OmegaProfile& omega, double t,
                                   double dt)
{
  const Quat4 y = rk4_step(q.value(), t, dt, [&](double s, const Quat4& x) -> Quat4 {
    return 0.5 * qmul(x, pure(omega(s)));
  });
  if (!y.all_finite()) {
    throw IntegrationFailure(t, ErrorCode::IntegrationFailure, "quaternion state is not finite");
  }
  try {
    return normalize(y);
  }
  catch (const Error& e) {
    throw IntegrationFailure(t, e.code(), e.what());
  }
}

Vec3 rotational_acceleration(const Quat4& q, const Quat4& qdot, const Quat4& qddot)
{
  const Quat4 w = 2.0 * (qmul(conjugate(q), qddot) + qmul(qdot, conjugate(qdot)));
  if (!(std::abs(w.q0) <= 1e-6)) {
    std::ostringstream os;
    os << "quaternion derivatives are inconsistent (scalar part " << w.q0 << ")";
    throw Error(ErrorCode::InconsistentDerivatives, os.str());
  }
  return w.q;
}

RotationMatrix attitude_error(const RotationMatrix& r, const RotationMatrix& r_star)
{
  return r.transpose() * r_star;
}

Mat3 attitude_error_derivative(const RotationMatrix& err, const AngularVelocity& omega,
                               const AngularVelocity& omega_star)
{
  return -skew(omega).matrix() * err.matrix() + err.matrix() * skew(omega_star).matrix();
}

UnitQuaternion quaternion_error(const UnitQuaternion& q, const UnitQuaternion& q_star)
{
  const double s0 = q_star.q0();
  const Vec3& s = q_star.q();
  return UnitQuaternion::unchecked(
      {s0 * q.q0() + s.dot(q.q()), s0 * q.q() - q.q0() * s - s.cross(q.q())});
}

Quat4 quaternion_error_derivative(const UnitQuaternion& q_err, const AngularVelocity& omega,
                                  const AngularVelocity& omega_star)
{
  const Vec3 w = omega - quaternion_to_rotation(q_err).transpose() * omega_star;
  return 0.5 * Quat4::from_vector(psi_matrix(q_err) * Vec4(0.0, w.x(), w.y(), w.z()));
}

Quat4 quaternion_error_derivative_expanded(const UnitQuaternion& q_err, const AngularVelocity& omega,
                                           const AngularVelocity& omega_star)
{
  const Vec3& q = q_err.q();
  return 0.5 * Quat4(q.dot(omega_star - omega),
                     q_err.q0() * (omega - omega_star) + q.cross(omega_star + omega));
}

Vec3 rodriguez_error_derivative(const RodriguezVector& rho_err, const RotationMatrix& r_star,
                                const Vec3& beta)
{
  const Vec3& p = rho_err.rho;
  const Mat3 g = Mat3::Identity() + skew(p).matrix() + p * p.transpose();
  return -0.5 * g * (r_star.matrix() * beta);
}

}  // namespace attitude
