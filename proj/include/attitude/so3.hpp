/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

namespace attitude {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Validation tolerance for orthonormality and determinant.
inline constexpr double kRotationTolerance = 1e-9;
/// Tolerance met by rotations freshly built from closed forms.
inline constexpr double kFreshRotationTolerance = 1e-12;
inline constexpr double kSkewTolerance = 1e-9;

/// A 3x3 skew-symmetric matrix, m + m^T = 0.
class SkewMat3 {
 public:
  SkewMat3() : m_(Mat3::Zero()) {}

  /// Checked construction, throws NotSkew when ||m + m^T||_F > 1e-9.
  static SkewMat3 from_matrix(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  operator const Mat3&() const { return m_; }

 private:
  explicit SkewMat3(const Mat3& m) : m_(m) {}
  friend SkewMat3 skew(const Vec3& v);
  friend SkewMat3 antisym_projection(const Mat3& b);

  Mat3 m_;
};

/// Element of SO(3): R^T R = I and det R = +1 within kRotationTolerance.
class RotationMatrix {
 public:
  RotationMatrix() : m_(Mat3::Identity()) {}

  static RotationMatrix identity() { return RotationMatrix(); }

  /// Wraps a matrix the caller has built from an exact closed form. No checks.
  static RotationMatrix unchecked(const Mat3& m) { return RotationMatrix(m); }

  const Mat3& matrix() const { return m_; }
  operator const Mat3&() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  RotationMatrix transpose() const { return RotationMatrix(m_.transpose()); }

  friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b)
  {
    return RotationMatrix(a.m_ * b.m_);
  }
  friend Vec3 operator*(const RotationMatrix& r, const Vec3& v) { return r.m_ * v; }

 private:
  explicit RotationMatrix(const Mat3& m) : m_(m) {}

  Mat3 m_;
};

/// [v]x, so that skew(v) * w = v x w.
SkewMat3 skew(const Vec3& v);

Vec3 vex(const SkewMat3& s);
/// Checked vex for an arbitrary matrix, throws NotSkew.
Vec3 vex(const Mat3& m);

/// Pa(B) = (B - B^T) / 2.
SkewMat3 antisym_projection(const Mat3& b);
Vec3 vex_pa(const Mat3& b);

/// ||R||_I = Tr(I - R) / 4, in [0, 1].
double normalized_distance(const RotationMatrix& r);

/// exp([w]x) by the closed Rodrigues formula.
RotationMatrix so3_exp(const Vec3& w);

/// Throws NotOrthogonal or ImproperRotation.
RotationMatrix validate_rotation(const Mat3& m, double tolerance = kRotationTolerance);

/// ||R^T R - I||_F.
double orthogonality_error(const Mat3& m);

}  // namespace attitude
