/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/measurements.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "attitude/kinematics.hpp"
#include "attitude/sampling.hpp"
#include "test_util.hpp"

namespace attitude {
namespace {

using testing::kDeg;
using testing::kPi;
using testing::near_matrix;
using testing::throws_code;

WeightMatrix random_weights(Sampler& rng)
{
  const VectorPair pairs[3] = {{rng.unit_vector(), Vec3::Zero()},
                               {rng.unit_vector(), Vec3::Zero()},
                               {rng.unit_vector(), Vec3::Zero()}};
  return build_weight_matrix(pairs, Frame::Inertial);
}

RotationMatrix bounded_rotation(Sampler& rng, double max_angle)
{
  return angle_axis_to_rotation({rng.uniform(0.0, max_angle), rng.unit_vector()});
}

TEST(BodyFromInertial, Cases)
{
  const Vec3 v(0.3, -1.0, 2.0);
  EXPECT_EQ(body_from_inertial(RotationMatrix::identity(), v), v);
  const RotationMatrix rz = so3_exp(Vec3(0, 0, kPi / 2));
  EXPECT_TRUE(near_matrix(body_from_inertial(rz, Vec3(1, 0, 0)), Vec3(0, -1, 0), 1e-15));
  Sampler rng(60);
  for (int n = 0; n < 1000; ++n) {
    const RotationMatrix r = rng.rotation();
    const Vec3 w = rng.vector(3.0);
    ASSERT_TRUE(near_matrix(body_from_inertial(r, w), sandwich_transform(rotation_to_quaternion(r), w), 1e-12));
  }
}

TEST(WeightMatrix, CoordinateAxes)
{
  const VectorPair pairs[3] = {{Vec3::UnitX(), Vec3::UnitX()},
                               {Vec3::UnitY(), Vec3::UnitY()},
                               {Vec3::UnitZ(), Vec3::UnitZ()}};
  const WeightMatrix w = build_weight_matrix(pairs, Frame::Inertial);
  EXPECT_EQ(w.m, Mat3::Identity());
  EXPECT_EQ(w.m_bar, Mat3(2.0 * Mat3::Identity()));
  EXPECT_EQ(w.lambda_min, 2.0);
}

TEST(WeightMatrix, TwoVectorsAreCompleted)
{
  const VectorPair pairs[2] = {{Vec3(2, 0, 0), Vec3::Zero()}, {Vec3(1, 1, 0), Vec3::Zero()}};
  const WeightMatrix w = build_weight_matrix(pairs, Frame::Inertial);
  EXPECT_NEAR(w.m.trace(), 3.0, 1e-15);
  EXPECT_GT(std::abs(w.m.determinant()), 0.1);
  EXPECT_TRUE(near_matrix(Vec3(w.m * Vec3::UnitZ()), Vec3::UnitZ(), 1e-15));
}

TEST(WeightMatrix, UsesRequestedFrame)
{
  const VectorPair pairs[2] = {{Vec3::UnitX(), Vec3::UnitY()}, {Vec3::UnitY(), Vec3::UnitZ()}};
  EXPECT_NEAR(build_weight_matrix(pairs, Frame::Inertial).m(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(build_weight_matrix(pairs, Frame::Body).m(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(build_weight_matrix(pairs, Frame::Body).m(1, 1), 1.0, 1e-15);
  EXPECT_NEAR(build_weight_matrix(pairs, Frame::Inertial).m(2, 2), 1.0, 1e-15);
}

TEST(WeightMatrix, Rejections)
{
  const VectorPair one[1] = {{Vec3::UnitX(), Vec3::UnitX()}};
  EXPECT_TRUE(throws_code([&] { build_weight_matrix(one, Frame::Inertial); }, ErrorCode::TooFewMeasurements));
  const VectorPair collinear[2] = {{Vec3(1, 0, 0), Vec3::Zero()}, {Vec3(-2, 0, 0), Vec3::Zero()}};
  EXPECT_TRUE(throws_code([&] { build_weight_matrix(collinear, Frame::Inertial); },
                          ErrorCode::CollinearMeasurements));
  const VectorPair zero[2] = {{Vec3::Zero(), Vec3::Zero()}, {Vec3::UnitX(), Vec3::Zero()}};
  EXPECT_TRUE(throws_code([&] { build_weight_matrix(zero, Frame::Inertial); }, ErrorCode::ZeroNorm));
  Mat3 asym = Mat3::Identity();
  asym(0, 1) = 0.5;
  EXPECT_TRUE(throws_code([&] { WeightMatrix::from_matrix(asym); }, ErrorCode::InvalidArgument));
}

TEST(SymmetricEigenvalues, MatchesIterativeSolver)
{
  Sampler rng(61);
  for (int n = 0; n < 10000; ++n) {
    const Mat3 a0 = testing::random_matrix(rng, 3.0);
    const Mat3 a = 0.5 * (a0 + a0.transpose());
    const auto e = symmetric_eigenvalues(a);
    const Eigen::SelfAdjointEigenSolver<Mat3> solver(a);
    const Vec3 expected = solver.eigenvalues();
    ASSERT_TRUE(near_matrix(Vec3(e[0], e[1], e[2]), expected, 1e-11));
  }
  const auto diag = symmetric_eigenvalues(Vec3(3, 1, 2).asDiagonal().toDenseMatrix());
  EXPECT_EQ(diag[0], 1.0);
  EXPECT_EQ(diag[2], 3.0);
  const auto repeated = symmetric_eigenvalues(Mat3::Constant(1.0));
  EXPECT_NEAR(repeated[0], 0.0, 1e-14);
  EXPECT_NEAR(repeated[1], 0.0, 1e-14);
  EXPECT_NEAR(repeated[2], 3.0, 1e-14);
}

TEST(WeightedDistance, Cases)
{
  Sampler rng(62);
  const WeightMatrix w = random_weights(rng);
  EXPECT_NEAR(weighted_distance(w, RotationMatrix::identity()), 0.0, 1e-16);
  const WeightMatrix id = WeightMatrix::from_matrix(Mat3::Identity());
  for (int n = 0; n < 100; ++n) {
    const RotationMatrix r = rng.rotation();
    ASSERT_NEAR(weighted_distance(id, r), normalized_distance(r), 1e-15);
  }
  EXPECT_EQ(weighted_distance_rodriguez(w, {Vec3::Zero()}), 0.0);
}

TEST(WeightedDistance, RodriguezFormsAgree)
{
  Sampler rng(63);
  for (int n = 0; n < 10000; ++n) {
    const WeightMatrix w = random_weights(rng);
    const RotationMatrix r = bounded_rotation(rng, 170 * kDeg);
    const RodriguezVector p = rotation_to_rodriguez(r);
    const double scale = std::max(1.0, p.rho.squaredNorm());
    ASSERT_NEAR(weighted_distance(w, r), weighted_distance_rodriguez(w, p), 1e-12 * scale);
    const Vec3 direct = vex_pa(Mat3(w.m * r.matrix()));
    ASSERT_TRUE(near_matrix(vex_pa_weighted(w, r), direct, 1e-12 * scale));
    ASSERT_NEAR(vex_pa_weighted_squared_norm(w, p), direct.squaredNorm(), 1e-11 * scale);
  }
  EXPECT_TRUE(throws_code([] { vex_pa_weighted(WeightMatrix::from_matrix(Mat3::Identity()),
                                               so3_exp(Vec3(kPi, 0, 0))); },
                          ErrorCode::Singular180));
}

TEST(TraceMinvMr, Cases)
{
  Sampler rng(64);
  const WeightMatrix w = random_weights(rng);
  const RotationMatrix r = rng.rotation();
  EXPECT_NEAR(trace_minv_mr(w, r), r.matrix().trace(), 1e-12);
  Mat3 singular = Mat3::Zero();
  singular(0, 0) = 1.5;
  singular(1, 1) = 1.5;
  EXPECT_TRUE(throws_code([&] { trace_minv_mr(WeightMatrix::from_matrix(singular), r); }, ErrorCode::SingularM));
}

TEST(WeightedBound, Cases)
{
  const WeightMatrix id = WeightMatrix::from_matrix(Mat3::Identity());
  const BoundCheck at_identity = weighted_bound_check(id, RotationMatrix::identity());
  EXPECT_EQ(at_identity.lhs, 0.0);
  EXPECT_EQ(at_identity.rhs, 0.0);
  EXPECT_TRUE(at_identity.holds);

  // with M = I the bound is an equality
  const RotationMatrix r = so3_exp(Vec3(0.3, -0.8, 0.5));
  const BoundCheck tight = weighted_bound_check(id, r);
  EXPECT_NEAR(tight.lhs, tight.rhs, 1e-15);
  EXPECT_TRUE(tight.holds);

  EXPECT_TRUE(throws_code([&] { weighted_bound_check(WeightMatrix::from_matrix(2.0 * Mat3::Identity()), r); },
                          ErrorCode::InvalidArgument));
  EXPECT_TRUE(throws_code([&] { weighted_bound_check(id, so3_exp(Vec3(0, 0, kPi))); },
                          ErrorCode::DenominatorVanishes));
}

TEST(WeightedBound, HoldsForRandomWeights)
{
  Sampler rng(65);
  int evaluated = 0;
  for (int n = 0; n < 10000; ++n) {
    const WeightMatrix w = random_weights(rng);
    const RotationMatrix r = bounded_rotation(rng, 170 * kDeg);
    const BoundCheck b = weighted_bound_check(w, r);
    ASSERT_TRUE(b.holds) << b.lhs << " > " << b.rhs;
    ++evaluated;
  }
  EXPECT_EQ(evaluated, 10000);
}

TEST(MeasurementOutput, Layout)
{
  const VectorPair p{Vec3(1, 0, 0), Vec3(0, 1, 0)};
  const Mat4 h = measurement_output_matrix(p);
  EXPECT_EQ(h(0, 0), 0.0);
  EXPECT_EQ(Vec3(h.block<3, 1>(1, 0)), Vec3(-1, 1, 0));
  EXPECT_EQ(Vec3(-h.block<1, 3>(0, 1).transpose()), Vec3(-1, 1, 0));
  EXPECT_EQ(Mat3(h.block<3, 3>(1, 1)), Mat3(-skew(Vec3(1, 1, 0)).matrix()));
  EXPECT_EQ(Mat4(h + h.transpose()), Mat4::Zero());
}

TEST(MeasurementOutput, AnnihilatesTrueAttitude)
{
  Sampler rng(66);
  for (int n = 0; n < 10000; ++n) {
    const UnitQuaternion q = rng.quaternion();
    const Vec3 vi = rng.unit_vector();
    const VectorPair pair{vi, body_from_inertial(quaternion_to_rotation(q), vi)};
    ASSERT_LE((measurement_output_matrix(pair) * q.as_vector()).norm(), 1e-10);
  }
}

TEST(MeasurementOutput, GrowsWithAttitudeError)
{
  Sampler rng(67);
  for (int n = 0; n < 1000; ++n) {
    const UnitQuaternion q = rng.quaternion();
    const Vec3 vi = rng.unit_vector();
    const VectorPair pair{vi, body_from_inertial(quaternion_to_rotation(q), vi)};
    const Vec3 axis = vi.cross(rng.unit_vector()).normalized();
    const double eps = 1e-4;
    const UnitQuaternion off = qmul(q, quaternion_from_angle_axis({eps, axis}));
    const double residual = (measurement_output_matrix(pair) * off.as_vector()).norm();
    ASSERT_GT(residual, 0.0);
    ASSERT_LE(residual, 4.0 * eps);
  }
}

TEST(WeightedIdentities, VexPaIsSumOfCrossProducts)
{
  Sampler rng(68);
  for (int n = 0; n < 1000; ++n) {
    const RotationMatrix r = rng.rotation();
    const Vec3 v1 = rng.unit_vector(), v2 = rng.unit_vector(), v3 = rng.unit_vector();
    const Mat3 m = v1 * v1.transpose() + v2 * v2.transpose() + v3 * v3.transpose();
    Vec3 cross_sum = Vec3::Zero();
    for (const Vec3& v : {v1, v2, v3}) {
      cross_sum += 0.5 * body_from_inertial(r, v).cross(v);
    }
    ASSERT_TRUE(near_matrix(vex_pa(Mat3(m * r.matrix())), cross_sum, 1e-12));
  }
}

TEST(LemmaSuite, AllIdentitiesPass)
{
  const LemmaReport report = lemma_suite(10000, 1);
  for (const auto& id : report.identities) {
    EXPECT_TRUE(id.passed()) << id.name << " residual " << id.max_residual;
    EXPECT_GT(id.evaluated, 9000u) << id.name;
  }
  EXPECT_EQ(report.bound_violations, 0u);
  EXPECT_GT(report.bound_evaluated, 9000u);
  EXPECT_LE(report.bound_worst_ratio, 1.0 + 1e-12);
  EXPECT_TRUE(report.all_passed());
  ASSERT_NE(report.find("quaternion.vex"), nullptr);
  EXPECT_EQ(report.find("no.such.identity"), nullptr);
}

TEST(LemmaSuite, Deterministic)
{
  const LemmaReport a = lemma_suite(500, 9), b = lemma_suite(500, 9);
  for (std::size_t i = 0; i < a.identities.size(); ++i) {
    EXPECT_EQ(a.identities[i].max_residual, b.identities[i].max_residual);
  }
}

TEST(LemmaSuite, IdentitySampleSkipsAxisIdentities)
{
  const LemmaSample s{UnitQuaternion::identity(), UnitQuaternion::identity(),
                      WeightMatrix::from_matrix(Mat3::Identity())};
  const LemmaReport report = evaluate_lemmas(std::span<const LemmaSample>(&s, 1));
  EXPECT_EQ(report.find("angle_axis.vex")->skipped, 1u);
  EXPECT_EQ(report.find("rodriguez_angle_axis.rho")->skipped, 1u);
  EXPECT_EQ(report.find("rodriguez.vex")->evaluated, 1u);
  EXPECT_EQ(report.find("quaternion.vex")->max_residual, 0.0);
  EXPECT_EQ(report.bound_evaluated, 1u);
  EXPECT_TRUE(report.all_passed());
}

TEST(LemmaSuite, HalfTurnSkipsRodriguezIdentities)
{
  const LemmaSample s{UnitQuaternion(0.0, 1.0, 0.0, 0.0), UnitQuaternion::identity(),
                      WeightMatrix::from_matrix(Mat3::Identity())};
  const LemmaReport report = evaluate_lemmas(std::span<const LemmaSample>(&s, 1));
  EXPECT_EQ(report.find("rodriguez.vex")->skipped, 1u);
  EXPECT_EQ(report.find("quaternion_rodriguez.rho")->skipped, 1u);
  EXPECT_EQ(report.find("quaternion.distance")->evaluated, 1u);
  EXPECT_TRUE(report.all_passed());
}

TEST(LemmaSuite, WeightedDomainIsSkipped)
{
  const LemmaSample s{UnitQuaternion::identity(), quaternion_from_angle_axis({175 * kDeg, Vec3::UnitZ()}),
                      WeightMatrix::from_matrix(Mat3::Identity())};
  const LemmaReport report = evaluate_lemmas(std::span<const LemmaSample>(&s, 1));
  EXPECT_EQ(report.find("weighted.distance")->skipped, 1u);
  EXPECT_EQ(report.bound_skipped, 1u);
}

}  // namespace
}  // namespace attitude
