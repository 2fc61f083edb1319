/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <Eigen/Core>

#include "attitude/so3.hpp"

namespace attitude {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat43 = Eigen::Matrix<double, 4, 3>;

/// Tolerance beyond which a quaternion is rejected as not normalized.
inline constexpr double kQuaternionNormTolerance = 1e-6;

/// General element of R^4, scalar first: [q0, q].
struct Quat4 {
  double q0 = 0.0;
  Vec3 q = Vec3::Zero();

  Quat4() = default;
  Quat4(double s, const Vec3& v) : q0(s), q(v) {}
  Quat4(double a, double b, double c, double d) : q0(a), q(b, c, d) {}

  static Quat4 from_vector(const Vec4& v) { return Quat4(v(0), v(1), v(2), v(3)); }
  Vec4 as_vector() const { return Vec4(q0, q.x(), q.y(), q.z()); }

  double squared_norm() const { return q0 * q0 + q.squaredNorm(); }
  double norm() const;
  bool all_finite() const;

  friend Quat4 operator+(const Quat4& a, const Quat4& b) { return {a.q0 + b.q0, a.q + b.q}; }
  friend Quat4 operator-(const Quat4& a, const Quat4& b) { return {a.q0 - b.q0, a.q - b.q}; }
  friend Quat4 operator-(const Quat4& a) { return {-a.q0, -a.q}; }
  friend Quat4 operator*(double s, const Quat4& a) { return {s * a.q0, s * a.q}; }
  friend Quat4 operator*(const Quat4& a, double s) { return s * a; }
  friend bool operator==(const Quat4& a, const Quat4& b) { return a.q0 == b.q0 && a.q == b.q; }
};

/// Pure quaternion [0, v].
inline Quat4 pure(const Vec3& v) { return {0.0, v}; }

/// Quaternion on S^3. Construction throws NotNormalized when
/// |q0^2 + |q|^2 - 1| exceeds kQuaternionNormTolerance.
class UnitQuaternion {
 public:
  UnitQuaternion() : value_(1.0, Vec3::Zero()) {}
  explicit UnitQuaternion(const Quat4& value);
  UnitQuaternion(double q0, double q1, double q2, double q3);

  static UnitQuaternion identity() { return UnitQuaternion(); }
  /// Wraps a value the caller knows to be unit norm to round-off. No checks.
  static UnitQuaternion unchecked(const Quat4& value);

  double q0() const { return value_.q0; }
  const Vec3& q() const { return value_.q; }
  const Quat4& value() const { return value_; }
  operator const Quat4&() const { return value_; }
  Vec4 as_vector() const { return value_.as_vector(); }

  UnitQuaternion operator-() const { return unchecked(-value_); }

 private:
  struct NoCheck {};
  UnitQuaternion(const Quat4& value, NoCheck) : value_(value) {}

  Quat4 value_;
};

/// Hamilton product [a0 b0 - a.b, a0 b + b0 a + a x b].
Quat4 qmul(const Quat4& a, const Quat4& b);
UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b);

Quat4 conjugate(const Quat4& x);
UnitQuaternion conjugate(const UnitQuaternion& x);

/// x / |x|, throws ZeroNorm when |x| <= 1e-12.
UnitQuaternion normalize(const Quat4& x);

/// Gamma(w) = [[0, -w^T], [w, -[w]x]].
Mat4 gamma_matrix(const Vec3& omega);
/// Xi(Q) = [-q^T; q0 I + [q]x].
Mat43 xi_matrix(const Quat4& x);
/// Psi(Q) = [[0, -q^T], [q, q0 I + [q]x]].
Mat4 psi_matrix(const Quat4& x);
/// PsiBar(Q) = [[0, q^T], [q, q0 I + [q]x]].
Mat4 psi_bar_matrix(const Quat4& x);

struct OperatorMatrices {
  Mat4 gamma;
  Mat43 xi;
  Mat4 psi;
  Mat4 psi_bar;
};

OperatorMatrices operator_matrices(const Vec3& omega, const UnitQuaternion& q);

/// v_body from [0, v_body] = Q^-1 (x) [0, v_inertial] (x) Q.
Vec3 sandwich_transform(const UnitQuaternion& q, const Vec3& v_inertial);

}  // namespace attitude
