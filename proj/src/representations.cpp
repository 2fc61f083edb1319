/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/representations.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "attitude/error.hpp"

namespace attitude {

namespace {

void require_unit_axis(const Vec3& u)
{
  if (!(std::abs(u.norm() - 1.0) <= kAxisUnitTolerance)) {
    std::ostringstream os;
    os << "rotation axis is not a unit vector (|u| = " << u.norm() << ")";
    throw Error(ErrorCode::AxisNotUnit, os.str());
  }
}

[[noreturn]] void throw_gimbal_lock()
{
  throw Error(ErrorCode::GimbalLock, "gimbal lock: pitch at +/-90 deg, roll and yaw are not unique");
}

[[noreturn]] void throw_singular_180()
{
  throw Error(ErrorCode::Singular180, "180° singularity: Rodriguez vector undefined (1 + Tr(R) = 0)");
}

}  // namespace

RotationMatrix euler_to_rotation(const EulerAngles& xi)
{
  const double cf = std::cos(xi.roll), sf = std::sin(xi.roll);
  const double ct = std::cos(xi.pitch), st = std::sin(xi.pitch);
  const double cp = std::cos(xi.yaw), sp = std::sin(xi.yaw);
  Mat3 r;
  r << cp * ct, cp * st * sf - sp * cf, cp * st * cf + sp * sf,
       sp * ct, sp * st * sf + cp * cf, sp * st * cf - cp * sf,
       -st, ct * sf, ct * cf;
  return RotationMatrix::unchecked(r);
}

EulerAngles rotation_to_euler(const RotationMatrix& r)
{
  const double c = std::hypot(r(2, 1), r(2, 2));
  if (c < kGimbalLockThreshold) {
    throw_gimbal_lock();
  }
  return {std::atan2(r(2, 1), r(2, 2)), std::atan2(-r(2, 0), c), std::atan2(r(1, 0), r(0, 0))};
}

RotationMatrix angle_axis_to_rotation(const AngleAxis& aa)
{
  require_unit_axis(aa.axis);
  return so3_exp(aa.angle * aa.axis);
}

AngleAxis rotation_to_angle_axis(const RotationMatrix& r)
{
  const double c = 0.5 * (r.matrix().trace() - 1.0);
  const Vec3 v = vex_pa(r);
  const double s = v.norm();
  if (s < kAxisThreshold) {
    throw Error(ErrorCode::UndefinedAxis,
                c > 0.0 ? "undefined axis: rotation angle is zero" : "undefined axis: rotation angle is 180°");
  }
  return {std::atan2(s, c), v / s};
}

RotationMatrix rodriguez_to_rotation(const RodriguezVector& rho)
{
  const Vec3& p = rho.rho;
  const double n = p.squaredNorm();
  const Mat3 r = ((1.0 - n) * Mat3::Identity() + 2.0 * p * p.transpose() + 2.0 * skew(p).matrix()) /
                 (1.0 + n);
  return RotationMatrix::unchecked(r);
}

RodriguezVector rotation_to_rodriguez(const RotationMatrix& r)
{
  const double d = 1.0 + r.matrix().trace();
  if (d < kSingular180Threshold) {
    throw_singular_180();
  }
  const Vec3 v = vex_pa(r);
  if (d >= 2.0) {
    return {2.0 * v / d};
  }
  return {v * (4.0 - d) / (2.0 * v.squaredNorm())};
}

RodriguezVector rotation_to_rodriguez_resolvent(const RotationMatrix& r)
{
  const double d = 1.0 + r.matrix().trace();
  if (d < kSingular180Threshold) {
    throw_singular_180();
  }
  const Mat3& m = r.matrix();
  const Mat3 c = (m + Mat3::Identity()).inverse() * (m - Mat3::Identity());
  return {vex_pa(c)};
}

RotationMatrix quaternion_to_rotation(const UnitQuaternion& q)
{
  const double q0 = q.q0();
  const double q1 = q.q().x(), q2 = q.q().y(), q3 = q.q().z();
  Mat3 r;
  r << 1.0 - 2.0 * (q2 * q2 + q3 * q3), 2.0 * (q1 * q2 - q0 * q3), 2.0 * (q1 * q3 + q0 * q2),
       2.0 * (q1 * q2 + q0 * q3), 1.0 - 2.0 * (q1 * q1 + q3 * q3), 2.0 * (q2 * q3 - q0 * q1),
       2.0 * (q1 * q3 - q0 * q2), 2.0 * (q2 * q3 + q0 * q1), 1.0 - 2.0 * (q1 * q1 + q2 * q2);
  return RotationMatrix::unchecked(r);
}

Quat4 rotation_to_quaternion_branch(const RotationMatrix& r, int branch)
{
  const double r11 = r(0, 0), r22 = r(1, 1), r33 = r(2, 2);
  double arg = 0.0;
  switch (branch) {
    case 0: arg = 1.0 + r11 + r22 + r33; break;
    case 1: arg = 1.0 + r11 - r22 - r33; break;
    case 2: arg = 1.0 - r11 + r22 - r33; break;
    case 3: arg = 1.0 - r11 - r22 + r33; break;
    default: throw Error(ErrorCode::InvalidArgument, "quaternion branch must be 0..3");
  }
  const double lead = 0.5 * std::sqrt(std::max(arg, 0.0));
  if (!(lead > 0.0)) {
    throw Error(ErrorCode::DenominatorVanishes, "quaternion branch divisor vanishes");
  }
  const double k = 0.25 / lead;
  switch (branch) {
    case 0:
      return {lead, k * (r(2, 1) - r(1, 2)), k * (r(0, 2) - r(2, 0)), k * (r(1, 0) - r(0, 1))};
    case 1:
      return {k * (r(2, 1) - r(1, 2)), lead, k * (r(0, 1) + r(1, 0)), k * (r(0, 2) + r(2, 0))};
    case 2:
      return {k * (r(0, 2) - r(2, 0)), k * (r(0, 1) + r(1, 0)), lead, k * (r(1, 2) + r(2, 1))};
    default:
      return {k * (r(1, 0) - r(0, 1)), k * (r(0, 2) + r(2, 0)), k * (r(1, 2) + r(2, 1)), lead};
  }
}

UnitQuaternion canonicalize(const UnitQuaternion& q)
{
  const Vec4 v = q.as_vector();
  for (int i = 0; i < 4; ++i) {
    if (v(i) != 0.0) {
      return v(i) > 0.0 ? q : -q;
    }
  }
  return q;
}

UnitQuaternion rotation_to_quaternion(const RotationMatrix& r)
{
  const double r11 = r(0, 0), r22 = r(1, 1), r33 = r(2, 2);
  const double args[4] = {1.0 + r11 + r22 + r33, 1.0 + r11 - r22 - r33, 1.0 - r11 + r22 - r33,
                          1.0 - r11 - r22 + r33};
  const int branch = static_cast<int>(std::max_element(args, args + 4) - args);
  return canonicalize(UnitQuaternion::unchecked(rotation_to_quaternion_branch(r, branch)));
}

AngleAxis angle_axis_from_rodriguez(const RodriguezVector& rho)
{
  const double n = rho.rho.norm();
  if (n < 1e-9) {
    throw Error(ErrorCode::UndefinedAxis, "undefined axis: Rodriguez vector is zero");
  }
  const double alpha = 2.0 * std::atan(n);
  return {alpha, rho.rho / std::tan(0.5 * alpha)};
}

RodriguezVector rodriguez_from_angle_axis(const AngleAxis& aa)
{
  require_unit_axis(aa.axis);
  const double c = std::cos(0.5 * aa.angle);
  if (std::abs(c) < kSingular180Threshold) {
    throw_singular_180();
  }
  return {std::tan(0.5 * aa.angle) * aa.axis};
}

UnitQuaternion quaternion_from_angle_axis(const AngleAxis& aa)
{
  require_unit_axis(aa.axis);
  const double h = 0.5 * aa.angle;
  return UnitQuaternion::unchecked({std::cos(h), std::sin(h) * aa.axis});
}

AngleAxis angle_axis_from_quaternion(const UnitQuaternion& q)
{
  if (std::abs(q.q0()) >= 1.0 - 1e-12) {
    throw Error(ErrorCode::UndefinedAxis, "undefined axis: quaternion is the identity");
  }
  const double s = q.q().norm();
  return {2.0 * std::atan2(s, q.q0()), q.q() / s};
}

UnitQuaternion quaternion_from_rodriguez(const RodriguezVector& rho)
{
  const double k = 1.0 / std::sqrt(1.0 + rho.rho.squaredNorm());
  return UnitQuaternion::unchecked({k, k * rho.rho});
}

RodriguezVector rodriguez_from_quaternion(const UnitQuaternion& q)
{
  if (std::abs(q.q0()) <= 1e-7) {
    throw Error(ErrorCode::RodriguezUndefined, "180° singularity: q0 = 0, Rodriguez vector undefined");
  }
  return {q.q() / q.q0()};
}

EulerAngles euler_from_rodriguez(const RodriguezVector& rho)
{
  const double p1 = rho.rho.x(), p2 = rho.rho.y(), p3 = rho.rho.z();
  const double n = rho.rho.squaredNorm();
  const double a = 2.0 * p2 * p3 + 2.0 * p1;
  const double b = 1.0 + p3 * p3 - p1 * p1 - p2 * p2;
  const double c = std::hypot(a, b);
  if (c / (1.0 + n) < kGimbalLockThreshold) {
    throw_gimbal_lock();
  }
  return {std::atan2(a, b), std::atan2(2.0 * p2 - 2.0 * p1 * p3, c),
          std::atan2(2.0 * p1 * p2 + 2.0 * p3, 1.0 + p1 * p1 - p2 * p2 - p3 * p3)};
}

EulerAngles euler_from_quaternion(const UnitQuaternion& q)
{
  const double q0 = q.q0();
  const double q1 = q.q().x(), q2 = q.q().y(), q3 = q.q().z();
  const double s = 2.0 * (q0 * q2 - q3 * q1);
  if (std::abs(s) > 1.0 - 1e-9) {
    throw_gimbal_lock();
  }
  return {std::atan2(2.0 * (q3 * q2 + q0 * q1), 1.0 - 2.0 * (q1 * q1 + q2 * q2)), std::asin(s),
          std::atan2(2.0 * (q2 * q1 + q0 * q3), 1.0 - 2.0 * (q2 * q2 + q3 * q3))};
}

}  // namespace attitude
