/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/so3.hpp"

#include <cmath>
#include <sstream>

#include "attitude/error.hpp"

namespace attitude {

SkewMat3 SkewMat3::from_matrix(const Mat3& m)
{
  const double asym = (m + m.transpose()).norm();
  if (!(asym <= kSkewTolerance)) {
    std::ostringstream os;
    os << "matrix is not skew-symmetric (||m + m^T|| = " << asym << ")";
    throw Error(ErrorCode::NotSkew, os.str());
  }
  return SkewMat3(m);
}

SkewMat3 skew(const Vec3& v)
{
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return SkewMat3(m);
}

Vec3 vex(const SkewMat3& s)
{
  const Mat3& m = s.matrix();
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

Vec3 vex(const Mat3& m)
{
  return vex(SkewMat3::from_matrix(m));
}

SkewMat3 antisym_projection(const Mat3& b)
{
  return SkewMat3(0.5 * (b - b.transpose()));
}

Vec3 vex_pa(const Mat3& b)
{
  return 0.5 * Vec3(b(2, 1) - b(1, 2), b(0, 2) - b(2, 0), b(1, 0) - b(0, 1));
}

double normalized_distance(const RotationMatrix& r)
{
  return 0.25 * (3.0 - r.matrix().trace());
}

RotationMatrix so3_exp(const Vec3& w)
{
  const double alpha2 = w.squaredNorm();
  const double alpha = std::sqrt(alpha2);
  if (alpha == 0.0) {
    return RotationMatrix::identity();
  }
  double a, b;
  if (alpha < 1e-6) {
    a = 1.0 - alpha2 / 6.0;
    b = 0.5 - alpha2 / 24.0;
  }
  else {
    a = std::sin(alpha) / alpha;
    b = (1.0 - std::cos(alpha)) / alpha2;
  }
  const Mat3 k = skew(w).matrix();
  return RotationMatrix::unchecked(Mat3::Identity() + a * k + b * (k * k));
}

double orthogonality_error(const Mat3& m)
{
  return (m.transpose() * m - Mat3::Identity()).norm();
}

RotationMatrix validate_rotation(const Mat3& m, double tolerance)
{
  if (!m.allFinite()) {
    throw Error(ErrorCode::NotOrthogonal, "matrix has non-finite entries");
  }
  const double orth = orthogonality_error(m);
  if (orth > tolerance) {
    std::ostringstream os;
    os << "matrix is not orthogonal (||R^T R - I||_F = " << orth << ")";
    throw Error(ErrorCode::NotOrthogonal, os.str());
  }
  const double det = m.determinant();
  if (std::abs(det - 1.0) > tolerance) {
    std::ostringstream os;
    os << "rotation by inversion (det = " << det << ")";
    throw Error(ErrorCode::ImproperRotation, os.str());
  }
  return RotationMatrix::unchecked(m);
}

}  // namespace attitude
