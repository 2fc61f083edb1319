/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "attitude/quaternion.hpp"
#include "attitude/so3.hpp"

namespace attitude {

/// Roll, pitch, yaw in radians. R = Rz(yaw) Ry(pitch) Rx(roll).
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;

  Vec3 as_vector() const { return Vec3(roll, pitch, yaw); }
  static EulerAngles from_vector(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
};

struct AngleAxis {
  double angle = 0.0;
  Vec3 axis = Vec3::UnitX();
};

/// Gibbs vector rho = tan(alpha/2) u.
struct RodriguezVector {
  Vec3 rho = Vec3::Zero();
};

inline constexpr double kGimbalLockThreshold = 1e-7;
inline constexpr double kAxisThreshold = 1e-7;
inline constexpr double kSingular180Threshold = 1e-7;
inline constexpr double kAxisUnitTolerance = 1e-9;

RotationMatrix euler_to_rotation(const EulerAngles& xi);
/// Throws GimbalLock when sqrt(R32^2 + R33^2) < 1e-7.
EulerAngles rotation_to_euler(const RotationMatrix& r);

/// Throws AxisNotUnit.
RotationMatrix angle_axis_to_rotation(const AngleAxis& aa);
/// alpha in [0, pi]. Throws UndefinedAxis when sin(alpha) < 1e-7.
AngleAxis rotation_to_angle_axis(const RotationMatrix& r);

RotationMatrix rodriguez_to_rotation(const RodriguezVector& rho);
/// Trace form 2 vex(R) / (1 + Tr R), evaluated as vex(R) (3 - Tr R) / (2 |vex(R)|^2)
/// when Tr R < 1. Throws Singular180 when 1 + Tr(R) < 1e-7.
RodriguezVector rotation_to_rodriguez(const RotationMatrix& r);
/// Resolvent form vex((R + I)^-1 (R - I)). Same guard as the trace form.
RodriguezVector rotation_to_rodriguez_resolvent(const RotationMatrix& r);

/// R = I + 2 q0 [q]x + 2 [q]x^2.
RotationMatrix quaternion_to_rotation(const UnitQuaternion& q);
/// Largest-argument branch, sign canonicalized so that the first nonzero
/// component is positive (q0 >= 0, then q1 >= 0, ...).
UnitQuaternion rotation_to_quaternion(const RotationMatrix& r);
/// One extraction branch, 0 for the q0 square root through 3 for q3.
/// Not canonicalized. Throws DenominatorVanishes when the root is zero.
Quat4 rotation_to_quaternion_branch(const RotationMatrix& r, int branch);
/// Flip sign so the first nonzero component is positive.
UnitQuaternion canonicalize(const UnitQuaternion& q);

AngleAxis angle_axis_from_rodriguez(const RodriguezVector& rho);
RodriguezVector rodriguez_from_angle_axis(const AngleAxis& aa);

UnitQuaternion quaternion_from_angle_axis(const AngleAxis& aa);
AngleAxis angle_axis_from_quaternion(const UnitQuaternion& q);

UnitQuaternion quaternion_from_rodriguez(const RodriguezVector& rho);
/// rho = q / q0. Throws RodriguezUndefined when |q0| <= 1e-7.
RodriguezVector rodriguez_from_quaternion(const UnitQuaternion& q);

EulerAngles euler_from_rodriguez(const RodriguezVector& rho);
/// Throws GimbalLock when |2(q0 q2 - q3 q1)| > 1 - 1e-9.
EulerAngles euler_from_quaternion(const UnitQuaternion& q);

}  // namespace attitude
