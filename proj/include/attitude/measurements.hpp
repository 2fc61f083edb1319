/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "attitude/quaternion.hpp"
#include "attitude/representations.hpp"
#include "attitude/so3.hpp"

namespace attitude {

/// A direction observed in the inertial frame and in the body frame.
struct VectorPair {
  Vec3 v_inertial;
  Vec3 v_body;
};

enum class Frame { Inertial, Body };

/// M, Mbar = Tr(M) I - M and the smallest eigenvalue of Mbar.
struct WeightMatrix {
  Mat3 m;
  Mat3 m_bar;
  double lambda_min;

  /// Throws InvalidArgument if m is not symmetric.
  static WeightMatrix from_matrix(const Mat3& m);
};

/// R^T v.
Vec3 body_from_inertial(const RotationMatrix& r, const Vec3& v_inertial);

/// Eigenvalues of a symmetric 3x3 matrix in ascending order, closed form.
std::array<double, 3> symmetric_eigenvalues(const Mat3& a);

/// M = sum v v^T / |v|^2 over the chosen frame. Two inputs are completed with
/// their normalized cross product.
///
/// Throws TooFewMeasurements, CollinearMeasurements, ZeroNorm.
WeightMatrix build_weight_matrix(std::span<const VectorPair> pairs, Frame frame);

/// ||MR||_I = Tr(M (I - R)) / 4.
double weighted_distance(const WeightMatrix& m, const RotationMatrix& r);
/// rho^T Mbar rho / (2 (1 + |rho|^2)).
double weighted_distance_rodriguez(const WeightMatrix& m, const RodriguezVector& rho);

/// (I + [rho]x)^T Mbar rho / (1 + |rho|^2) with rho extracted from r.
///
/// Throws Singular180.
Vec3 vex_pa_weighted(const WeightMatrix& m, const RotationMatrix& r);
Vec3 vex_pa_weighted(const WeightMatrix& m, const RodriguezVector& rho);
/// rho^T Mbar (I - [rho]x^2) Mbar rho / (1 + |rho|^2)^2.
double vex_pa_weighted_squared_norm(const WeightMatrix& m, const RodriguezVector& rho);

/// Tr(M^-1 M R) with M^-1 formed explicitly. Throws SingularM.
double trace_minv_mr(const WeightMatrix& m, const RotationMatrix& r);

struct BoundCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// ||MR||_I <= (2 / lambda_min) |vex_pa(MR)|^2 / (1 + Tr(M^-1 M R)).
///
/// Requires Tr(M) = 3 and rank 3. Throws SingularM, DenominatorVanishes.
BoundCheck weighted_bound_check(const WeightMatrix& m, const RotationMatrix& r);

/// H(vI, vB) = [[0, -(vB - vI)^T], [vB - vI, -[vB + vI]x]].
Mat4 measurement_output_matrix(const VectorPair& pair);

struct IdentityResidual {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 1e-9;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;

  bool passed() const { return max_residual <= tolerance; }
};

struct LemmaReport {
  std::vector<IdentityResidual> identities;
  std::size_t bound_evaluated = 0;
  std::size_t bound_skipped = 0;
  std::size_t bound_violations = 0;
  double bound_worst_ratio = 0.0;

  bool all_passed() const;
  const IdentityResidual* find(const std::string& name) const;
};

struct LemmaSample {
  UnitQuaternion q;
  /// Attitude for the weighted identities and the bound.
  UnitQuaternion q_weighted;
  WeightMatrix m;
};

/// Evaluates every identity on the given samples. Samples outside an
/// identity's domain are counted as skipped.
LemmaReport evaluate_lemmas(std::span<const LemmaSample> samples);

/// Uniform attitudes, random three-vector weights with smallest eigenvalue of
/// M at least 0.01; the weighted attitudes are drawn with rotation angle at
/// most 170 deg.
LemmaReport lemma_suite(std::size_t samples, std::uint64_t seed = 1);

}  // namespace attitude
