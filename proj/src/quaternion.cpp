/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/quaternion.hpp"

#include <cmath>
#include <sstream>

#include "attitude/error.hpp"

namespace attitude {

double Quat4::norm() const
{
  return std::sqrt(squared_norm());
}

bool Quat4::all_finite() const
{
  return std::isfinite(q0) && q.allFinite();
}

UnitQuaternion::UnitQuaternion(const Quat4& value) : value_(value)
{
  const double dev = std::abs(value.squared_norm() - 1.0);
  if (!(dev <= kQuaternionNormTolerance)) {
    std::ostringstream os;
    os << "quaternion is not normalized (|Q|^2 - 1 = " << value.squared_norm() - 1.0 << ")";
    throw Error(ErrorCode::NotNormalized, os.str());
  }
}

UnitQuaternion::UnitQuaternion(double q0, double q1, double q2, double q3)
    : UnitQuaternion(Quat4(q0, q1, q2, q3))
{
}

UnitQuaternion UnitQuaternion::unchecked(const Quat4& value)
{
  return UnitQuaternion(value, NoCheck{});
}

Quat4 qmul(const Quat4& a, const Quat4& b)
{
  return {a.q0 * b.q0 - a.q.dot(b.q), a.q0 * b.q + b.q0 * a.q + a.q.cross(b.q)};
}

UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b)
{
  return UnitQuaternion::unchecked(qmul(a.value(), b.value()));
}

Quat4 conjugate(const Quat4& x)
{
  return {x.q0, -x.q};
}

UnitQuaternion conjugate(const UnitQuaternion& x)
{
  return UnitQuaternion::unchecked(conjugate(x.value()));
}

UnitQuaternion normalize(const Quat4& x)
{
  const double n = x.norm();
  if (!(n > 1e-12)) {
    throw Error(ErrorCode::ZeroNorm, "cannot normalize a zero quaternion");
  }
  return UnitQuaternion::unchecked((1.0 / n) * x);
}

Mat4 gamma_matrix(const Vec3& omega)
{
  Mat4 g;
  g(0, 0) = 0.0;
  g.block<1, 3>(0, 1) = -omega.transpose();
  g.block<3, 1>(1, 0) = omega;
  g.block<3, 3>(1, 1) = -skew(omega).matrix();
  return g;
}

Mat43 xi_matrix(const Quat4& x)
{
  Mat43 m;
  m.row(0) = -x.q.transpose();
  m.block<3, 3>(1, 0) = x.q0 * Mat3::Identity() + skew(x.q).matrix();
  return m;
}

Mat4 psi_matrix(const Quat4& x)
{
  Mat4 m;
  m(0, 0) = 0.0;
  m.block<1, 3>(0, 1) = -x.q.transpose();
  m.block<3, 1>(1, 0) = x.q;
  m.block<3, 3>(1, 1) = x.q0 * Mat3::Identity() + skew(x.q).matrix();
  return m;
}

Mat4 psi_bar_matrix(const Quat4& x)
{
  Mat4 m = psi_matrix(x);
  m.block<1, 3>(0, 1) = x.q.transpose();
  return m;
}

OperatorMatrices operator_matrices(const Vec3& omega, const UnitQuaternion& q)
{
  return {gamma_matrix(omega), xi_matrix(q), psi_matrix(q), psi_bar_matrix(q)};
}

Vec3 sandwich_transform(const UnitQuaternion& q, const Vec3& v_inertial)
{
  return qmul(qmul(conjugate(q.value()), pure(v_inertial)), q.value()).q;
}

}  // namespace attitude
