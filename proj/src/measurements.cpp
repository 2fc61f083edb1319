/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/measurements.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "attitude/error.hpp"
#include "attitude/sampling.hpp"

namespace attitude {

WeightMatrix WeightMatrix::from_matrix(const Mat3& m)
{
  if (!((m - m.transpose()).norm() <= 1e-12 * std::max(1.0, m.norm()))) {
    throw Error(ErrorCode::InvalidArgument, "weight matrix is not symmetric");
  }
  WeightMatrix w;
  w.m = m;
  w.m_bar = m.trace() * Mat3::Identity() - m;
  w.lambda_min = symmetric_eigenvalues(w.m_bar)[0];
  return w;
}

Vec3 body_from_inertial(const RotationMatrix& r, const Vec3& v_inertial)
{
  return r.matrix().transpose() * v_inertial;
}

std::array<double, 3> symmetric_eigenvalues(const Mat3& a)
{
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  std::array<double, 3> e;
  if (p1 == 0.0) {
    e = {a(0, 0), a(1, 1), a(2, 2)};
    std::sort(e.begin(), e.end());
    return e;
  }
  const double q = a.trace() / 3.0;
  const double d0 = a(0, 0) - q, d1 = a(1, 1) - q, d2 = a(2, 2) - q;
  const double p = std::sqrt((d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1) / 6.0);
  const Mat3 b = (a - q * Mat3::Identity()) / p;
  const double r = std::clamp(0.5 * b.determinant(), -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {lo, 3.0 * q - hi - lo, hi};
}

WeightMatrix build_weight_matrix(std::span<const VectorPair> pairs, Frame frame)
{
  if (pairs.size() < 2) {
    throw Error(ErrorCode::TooFewMeasurements, "at least two vector measurements are required");
  }
  std::vector<Vec3> vs;
  vs.reserve(pairs.size() + 1);
  for (const VectorPair& p : pairs) {
    const Vec3& v = frame == Frame::Body ? p.v_body : p.v_inertial;
    if (!(v.norm() > 1e-12)) {
      throw Error(ErrorCode::ZeroNorm, "measurement vector is zero");
    }
    vs.push_back(v);
  }
  const Vec3 c = vs[0].cross(vs[1]);
  if (c.norm() / (vs[0].norm() * vs[1].norm()) < 1e-6) {
    throw Error(ErrorCode::CollinearMeasurements, "first two measurement vectors are collinear");
  }
  if (vs.size() == 2) {
    vs.push_back(c);
  }
  Mat3 m = Mat3::Zero();
  for (const Vec3& v : vs) {
    m += v * v.transpose() / v.squaredNorm();
  }
  return WeightMatrix::from_matrix(0.5 * (m + m.transpose()));
}

double weighted_distance(const WeightMatrix& m, const RotationMatrix& r)
{
  return 0.25 * (m.m * (Mat3::Identity() - r.matrix())).trace();
}

double weighted_distance_rodriguez(const WeightMatrix& m, const RodriguezVector& rho)
{
  const Vec3& p = rho.rho;
  return 0.5 * p.dot(m.m_bar * p) / (1.0 + p.squaredNorm());
}

Vec3 vex_pa_weighted(const WeightMatrix& m, const RodriguezVector& rho)
{
  const Vec3& p = rho.rho;
  return (Mat3::Identity() + skew(p).matrix()).transpose() * (m.m_bar * p) / (1.0 + p.squaredNorm());
}

Vec3 vex_pa_weighted(const WeightMatrix& m, const RotationMatrix& r)
{
  return vex_pa_weighted(m, rotation_to_rodriguez(r));
}

double vex_pa_weighted_squared_norm(const WeightMatrix& m, const RodriguezVector& rho)
{
  const Vec3& p = rho.rho;
  const Mat3 k = skew(p).matrix();
  const Vec3 mp = m.m_bar * p;
  const double d = 1.0 + p.squaredNorm();
  return mp.dot((Mat3::Identity() - k * k) * mp) / (d * d);
}

double trace_minv_mr(const WeightMatrix& m, const RotationMatrix& r)
{
  const double det = m.m.determinant();
  if (!(std::abs(det) > 1e-12)) {
    throw Error(ErrorCode::SingularM, "weight matrix is singular");
  }
  return (m.m.inverse() * (m.m * r.matrix())).trace();
}

BoundCheck weighted_bound_check(const WeightMatrix& m, const RotationMatrix& r)
{
  if (!(std::abs(m.m.trace() - 3.0) <= 1e-9)) {
    throw Error(ErrorCode::InvalidArgument, "weight matrix must have trace 3");
  }
  const double denom = 1.0 + trace_minv_mr(m, r);
  if (!(denom > 1e-9)) {
    throw Error(ErrorCode::DenominatorVanishes, "1 + Tr(M^-1 M R) vanishes");
  }
  if (!(m.lambda_min > 0.0)) {
    throw Error(ErrorCode::SingularM, "Mbar has a zero eigenvalue");
  }
  const double lhs = weighted_distance(m, r);
  const double rhs = 2.0 / m.lambda_min * vex_pa(m.m * r.matrix()).squaredNorm() / denom;
  return {lhs, rhs, lhs <= rhs + 1e-12 * std::max(1.0, rhs)};
}

Mat4 measurement_output_matrix(const VectorPair& pair)
{
  const Vec3 d = pair.v_body - pair.v_inertial;
  Mat4 h;
  h(0, 0) = 0.0;
  h.block<1, 3>(0, 1) = -d.transpose();
  h.block<3, 1>(1, 0) = d;
  h.block<3, 3>(1, 1) = -skew(pair.v_body + pair.v_inertial).matrix();
  return h;
}

bool LemmaReport::all_passed() const
{
  return bound_violations == 0 &&
         std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.passed(); });
}

const IdentityResidual* LemmaReport::find(const std::string& name) const
{
  for (const auto& r : identities) {
    if (r.name == name) {
      return &r;
    }
  }
  return nullptr;
}

namespace {

enum Id {
  kRodVex,
  kRodDistance,
  kRodVexNorm,
  kQuatVex,
  kQuatDistance,
  kQuatVexNorm,
  kDistanceVexNorm,
  kAxisVex,
  kAxisDistance,
  kAxisVexNorm,
  kRodAxisRho,
  kRodAxisAngle,
  kRodAxisAxis,
  kQuatAxisAngle,
  kQuatAxisAxis,
  kQuatAxisQ0,
  kQuatAxisQ,
  kQuatRodQ0,
  kQuatRodQ,
  kQuatRodRho,
  kWeightedDistance,
  kWeightedVex,
  kWeightedVexNorm,
  kWeightedTrace,
  kIdCount,
};

constexpr const char* kNames[kIdCount] = {
    "rodriguez.vex",
    "rodriguez.distance",
    "rodriguez.vex_norm",
    "quaternion.vex",
    "quaternion.distance",
    "quaternion.vex_norm",
    "distance.vex_norm",
    "angle_axis.vex",
    "angle_axis.distance",
    "angle_axis.vex_norm",
    "rodriguez_angle_axis.rho",
    "rodriguez_angle_axis.angle",
    "rodriguez_angle_axis.axis",
    "quaternion_angle_axis.angle",
    "quaternion_angle_axis.axis",
    "quaternion_angle_axis.q0",
    "quaternion_angle_axis.q",
    "quaternion_rodriguez.q0",
    "quaternion_rodriguez.q",
    "quaternion_rodriguez.rho",
    "weighted.distance",
    "weighted.vex",
    "weighted.vex_norm",
    "weighted.trace",
};

double residual(double a, double b)
{
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

double residual(const Vec3& a, const Vec3& b)
{
  return (a - b).lpNorm<Eigen::Infinity>() / std::max(1.0, b.lpNorm<Eigen::Infinity>());
}

double rotation_angle(const UnitQuaternion& q)
{
  return 2.0 * std::atan2(q.q().norm(), std::abs(q.q0()));
}

template <class F>
auto try_extract(F&& f) -> std::optional<decltype(f())>
{
  try {
    return f();
  }
  catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

LemmaReport evaluate_lemmas(std::span<const LemmaSample> samples)
{
  LemmaReport report;
  report.identities.resize(kIdCount);
  for (int i = 0; i < kIdCount; ++i) {
    report.identities[i].name = kNames[i];
  }
  auto& ids = report.identities;
  auto add = [&](Id id, double r) {
    ids[id].max_residual = std::max(ids[id].max_residual, r);
    ++ids[id].evaluated;
  };
  auto skip = [&](std::initializer_list<Id> list) {
    for (Id id : list) {
      ++ids[id].skipped;
    }
  };

  for (const LemmaSample& s : samples) {
    const RotationMatrix r = quaternion_to_rotation(s.q);
    const UnitQuaternion qc = canonicalize(s.q);
    const Vec3 vx = vex_pa(r);
    const double dist = normalized_distance(r);
    const double vn2 = vx.squaredNorm();

    add(kQuatVex, residual(vx, 2.0 * s.q.q0() * s.q.q()));
    add(kQuatDistance, residual(dist, 1.0 - s.q.q0() * s.q.q0()));
    add(kQuatVexNorm, residual(vn2, 4.0 * s.q.q0() * s.q.q0() * s.q.q().squaredNorm()));
    add(kDistanceVexNorm, residual(vn2, 4.0 * (1.0 - dist) * dist));

    const auto aa = try_extract([&] { return rotation_to_angle_axis(r); });
    if (aa) {
      const double c = std::cos(0.5 * aa->angle), sn = std::sin(0.5 * aa->angle);
      add(kAxisVex, residual(vx, 2.0 * c * sn * aa->axis));
      add(kAxisDistance, residual(dist, sn * sn));
      add(kAxisVexNorm, residual(vn2, 4.0 * c * c * sn * sn));
      add(kQuatAxisAngle, residual(aa->angle, 2.0 * std::acos(qc.q0())));
      add(kQuatAxisAxis, residual(aa->axis, qc.q() / sn));
      add(kQuatAxisQ0, residual(qc.q0(), c));
      add(kQuatAxisQ, residual(qc.q(), aa->axis * sn));
    }
    else {
      skip({kAxisVex, kAxisDistance, kAxisVexNorm, kQuatAxisAngle, kQuatAxisAxis, kQuatAxisQ0,
            kQuatAxisQ});
    }

    const auto rho = try_extract([&] { return rotation_to_rodriguez(r); });
    if (rho) {
      const double n = rho->rho.squaredNorm();
      add(kRodVex, residual(vx, 2.0 * rho->rho / (1.0 + n)));
      add(kRodDistance, residual(dist, n / (1.0 + n)));
      add(kRodVexNorm, residual(vn2, 4.0 * n / ((1.0 + n) * (1.0 + n))));
      const double k = 1.0 / std::sqrt(1.0 + n);
      add(kQuatRodQ0, residual(qc.q0(), k));
      add(kQuatRodQ, residual(qc.q(), k * rho->rho));
      if (std::abs(qc.q0()) > 1e-7) {
        add(kQuatRodRho, residual(rho->rho, qc.q() / qc.q0()));
      }
      else {
        skip({kQuatRodRho});
      }
    }
    else {
      skip({kRodVex, kRodDistance, kRodVexNorm, kQuatRodQ0, kQuatRodQ, kQuatRodRho});
    }

    if (aa && rho) {
      const double t = std::tan(0.5 * aa->angle);
      add(kRodAxisRho, residual(rho->rho, t * aa->axis));
      add(kRodAxisAngle, residual(aa->angle, 2.0 * std::atan(rho->rho.norm())));
      add(kRodAxisAxis, residual(aa->axis, rho->rho / t));
    }
    else {
      skip({kRodAxisRho, kRodAxisAngle, kRodAxisAxis});
    }

    const RotationMatrix rw = quaternion_to_rotation(s.q_weighted);
    const auto rho_w = try_extract([&] { return rotation_to_rodriguez(rw); });
    const bool in_domain = rotation_angle(s.q_weighted) <= 170.0 * std::numbers::pi / 180.0;
    if (rho_w && in_domain) {
      const Mat3 mr = s.m.m * rw.matrix();
      const Vec3 vw = vex_pa(mr);
      add(kWeightedDistance, residual(weighted_distance(s.m, rw), weighted_distance_rodriguez(s.m, *rho_w)));
      add(kWeightedVex, residual(vw, vex_pa_weighted(s.m, *rho_w)));
      add(kWeightedVexNorm, residual(vw.squaredNorm(), vex_pa_weighted_squared_norm(s.m, *rho_w)));
      const auto tr = try_extract([&] { return trace_minv_mr(s.m, rw); });
      if (tr) {
        add(kWeightedTrace, residual(1.0 - normalized_distance(rw), 0.25 * (1.0 + *tr)));
      }
      else {
        skip({kWeightedTrace});
      }
      const auto b = try_extract([&] { return weighted_bound_check(s.m, rw); });
      if (b) {
        ++report.bound_evaluated;
        if (!b->holds) {
          ++report.bound_violations;
        }
        if (b->rhs > 0.0) {
          report.bound_worst_ratio = std::max(report.bound_worst_ratio, b->lhs / b->rhs);
        }
      }
      else {
        ++report.bound_skipped;
      }
    }
    else {
      skip({kWeightedDistance, kWeightedVex, kWeightedVexNorm, kWeightedTrace});
      ++report.bound_skipped;
    }
  }
  return report;
}

LemmaReport lemma_suite(std::size_t samples, std::uint64_t seed)
{
  constexpr double kMinWeightEigenvalue = 1e-2;
  Sampler sampler(seed);
  const double max_angle = 170.0 * std::numbers::pi / 180.0;
  std::vector<LemmaSample> batch;
  batch.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const UnitQuaternion q = sampler.quaternion();
    UnitQuaternion qw = sampler.quaternion();
    while (rotation_angle(qw) > max_angle) {
      qw = sampler.quaternion();
    }
    WeightMatrix m = WeightMatrix::from_matrix(Mat3::Identity());
    for (;;) {
      const VectorPair pairs[3] = {{sampler.unit_vector(), Vec3::Zero()},
                                   {sampler.unit_vector(), Vec3::Zero()},
                                   {sampler.unit_vector(), Vec3::Zero()}};
      try {
        m = build_weight_matrix(pairs, Frame::Inertial);
      }
      catch (const Error&) {
        continue;
      }
      if (symmetric_eigenvalues(m.m)[0] >= kMinWeightEigenvalue) {
        break;
      }
    }
    batch.push_back({q, qw, m});
  }
  return evaluate_lemmas(batch);
}

}  // namespace attitude
