/* SPDX-License-Identifier: Apache-2.0 */
// Acceptance checks, one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "attitude/error.hpp"
#include "attitude/kinematics.hpp"
#include "attitude/measurements.hpp"
#include "attitude/representations.hpp"
#include "attitude/sampling.hpp"
#include "attitude/sim/scenario.hpp"
#include "attitude/sim/simulation.hpp"

using namespace attitude;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

template <class V>
double max_abs_diff(const V& a, const std::vector<double>& b)
{
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    d = std::max(d, std::abs(a[static_cast<Eigen::Index>(i)] - b[i]));
  }
  return d;
}

bool throws(const std::function<void()>& f, ErrorCode code)
{
  try {
    f();
  }
  catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Outcome table_fixture(int example, const std::vector<double>& xi_deg, const std::vector<double>& rho,
                      const std::vector<double>& q)
{
  Outcome o;
  const RotationMatrix r0 = sim::builtin_example(example).r0;
  const EulerAngles xi = rotation_to_euler(r0);
  const double d_xi = max_abs_diff(Vec3(xi.as_vector() / kDeg), xi_deg);
  const double d_rho = max_abs_diff(rotation_to_rodriguez(r0).rho, rho);
  const double d_q = max_abs_diff(rotation_to_quaternion(r0).as_vector(), q);
  o.require(d_xi <= 5e-4, "xi off by " + fmt("%.3g", d_xi) + " deg");
  o.require(d_rho <= 5e-4, "rho off by " + fmt("%.3g", d_rho));
  o.require(d_q <= 5e-4, "Q off by " + fmt("%.3g", d_q));
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max dev xi %.2g deg", d_xi) + fmt(", rho %.2g", d_rho) +
              fmt(", Q %.2g", d_q);
  return o;
}

Outcome criterion1()
{
  return table_fixture(1, {4.8035, 13.4601, 12.9329}, {0.0286, 0.1227, 0.1083}, {0.9865, 0.0282, 0.1210, 0.1069});
}

Outcome criterion2()
{
  return table_fixture(2, {56.1428, 20.6724, 44.4471}, {0.4413, 0.3850, 0.2994}, {0.8355, 0.3687, 0.3216, 0.2502});
}

Outcome criterion3()
{
  Outcome o;
  const Quat4 s(0.7794, -0.1440, 0.4623, -0.3976);
  Mat3 printed;
  printed << 0.2563, 0.4867, 0.8351,
             -0.7529, 0.6423, -0.1433,
             -0.6061, -0.5921, 0.5311;
  const UnitQuaternion q = normalize(s), neg = normalize(-s);
  const Mat3 r = quaternion_to_rotation(q).matrix();
  const double d = (r - printed).lpNorm<Eigen::Infinity>();
  o.require(d <= 5e-4, "entry off by " + fmt("%.3g", d));
  o.require(r == quaternion_to_rotation(neg).matrix(), "R(S) != R(-S)");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max entry dev %.2g, R(S) == R(-S)", d);
  return o;
}

Outcome criterion4()
{
  Outcome o;
  constexpr int kSamples = 100000;
  Sampler rng(4);
  double e_q = 0, e_aa = 0, e_rho = 0, e_xi = 0;
  int n_aa = 0, n_rho = 0;
  for (int n = 0; n < kSamples; ++n) {
    const RotationMatrix r = rng.rotation();
    e_q = std::max(e_q, (quaternion_to_rotation(rotation_to_quaternion(r)).matrix() - r.matrix()).norm());
    const double a = std::acos(std::clamp((r.matrix().trace() - 1) / 2, -1.0, 1.0));
    if (a > 1e-3 && a < kPi - 1e-3) {
      e_aa = std::max(e_aa, (angle_axis_to_rotation(rotation_to_angle_axis(r)).matrix() - r.matrix()).norm());
      ++n_aa;
    }
    if (1.0 + r.matrix().trace() > 1e-3) {
      e_rho = std::max(e_rho, (rodriguez_to_rotation(rotation_to_rodriguez(r)).matrix() - r.matrix()).norm());
      ++n_rho;
    }
    const EulerAngles xi{rng.uniform(-kPi, kPi), rng.uniform(-kPi / 2 + 1e-3, kPi / 2 - 1e-3),
                         rng.uniform(-kPi, kPi)};
    const EulerAngles back = rotation_to_euler(euler_to_rotation(xi));
    e_xi = std::max(e_xi, (back.as_vector() - xi.as_vector()).lpNorm<Eigen::Infinity>());
  }
  o.require(e_q <= 1e-9, "quaternion round trip " + fmt("%.3g", e_q));
  o.require(e_aa <= 1e-9, "angle-axis round trip " + fmt("%.3g", e_aa));
  o.require(e_rho <= 1e-9, "Rodriguez round trip " + fmt("%.3g", e_rho));
  o.require(e_xi <= 1e-9, "Euler round trip " + fmt("%.3g", e_xi));
  std::ostringstream os;
  os << "max errors Q " << fmt("%.2g", e_q) << ", angle-axis " << fmt("%.2g", e_aa) << " (" << n_aa
     << "), rho " << fmt("%.2g", e_rho) << " (" << n_rho << "), Euler " << fmt("%.2g", e_xi) << " rad";
  o.detail += (o.detail.empty() ? "" : "; ") + os.str();
  return o;
}

Outcome criterion5()
{
  Outcome o;
  const LemmaReport report = lemma_suite(10000, 1);
  double worst = 0.0;
  for (const auto& id : report.identities) {
    worst = std::max(worst, id.max_residual);
    o.require(id.passed(), id.name + " residual " + fmt("%.3g", id.max_residual));
    o.require(id.evaluated > 0, id.name + " never evaluated");
  }
  o.require(report.bound_violations == 0, std::to_string(report.bound_violations) + " bound violations");
  o.require(report.bound_evaluated >= 9000, "bound evaluated on " + std::to_string(report.bound_evaluated));
  std::ostringstream os;
  os << report.identities.size() << " identities, worst residual " << fmt("%.2g", worst) << "; bound on "
     << report.bound_evaluated << " samples, worst lhs/rhs " << fmt("%.6f", report.bound_worst_ratio);
  o.detail += (o.detail.empty() ? "" : "; ") + os.str();
  return o;
}

Outcome criterion6()
{
  Outcome o;
  const sim::RunOutput out = sim::run_simulation(sim::builtin_example(1));
  const auto& q = out.summary(sim::Track::Quat);
  const auto& rho = out.summary(sim::Track::Rodriguez);
  const auto& xi = out.summary(sim::Track::Euler);
  o.require(!q.failed && q.max_frobenius <= 1e-6, "quaternion-RK4 " + fmt("%.3g", q.max_frobenius));
  o.require(!rho.failed && rho.max_frobenius <= 1e-6, "Rodriguez-RK4 " + fmt("%.3g", rho.max_frobenius));
  o.require(!xi.failed && xi.max_frobenius <= 1e-3, "Euler-RK4 " + fmt("%.3g", xi.max_frobenius));
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max Frobenius quat %.2g", q.max_frobenius) +
              fmt(", rodriguez %.2g", rho.max_frobenius) + fmt(", euler %.2g", xi.max_frobenius);
  return o;
}

Outcome criterion7()
{
  Outcome o;
  const sim::RunOutput out = sim::run_simulation(sim::builtin_example(2));
  const auto& xi = out.summary(sim::Track::Euler);
  const auto& qe = out.summary(sim::Track::QuatExact);
  const bool euler_fails = xi.failed;
  o.require(euler_fails || xi.max_abs_divergence > 0.1,
            "Euler-RK4 max |divergence| " + fmt("%.3g", xi.max_abs_divergence) + " <= 0.1 and no failure");
  o.require(!qe.failed && qe.max_abs_divergence <= 1e-6,
            "quaternion-exact max |divergence| " + fmt("%.3g", qe.max_abs_divergence));
  double min_cos = 1.0;
  for (const auto& row : out.rows) {
    if (row.xi) {
      min_cos = std::min(min_cos, std::abs(std::cos(row.xi->pitch)));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("euler max |div| %.2g", xi.max_abs_divergence) +
              fmt(", quat-exact max |div| %.2g", qe.max_abs_divergence) + fmt(", min |cos(pitch)| %.3f", min_cos);
  return o;
}

Outcome criterion8()
{
  Outcome o;
  const sim::Scenario s = sim::builtin_example(1);
  RotationMatrix r = s.r0;
  UnitQuaternion q = rotation_to_quaternion(r);
  constexpr long kSteps = 1000000;
  double det_err = 0, orth_err = 0, norm_err = 0, agree = 0;
  for (long k = 0; k < kSteps; ++k) {
    const double t = static_cast<double>(k) * s.dt;
    const Vec3 w = s.omega_at(t);
    r = propagate_rotation_exact(r, w, s.dt);
    q = propagate_quaternion_exact(q, w, s.dt);
    if (k % 100 == 99 || k == kSteps - 1) {
      det_err = std::max(det_err, std::abs(r.matrix().determinant() - 1.0));
      orth_err = std::max(orth_err, (r.matrix().transpose() * r.matrix() - Mat3::Identity()).norm());
      norm_err = std::max(norm_err, std::abs(q.value().norm() - 1.0));
      agree = std::max(agree, (quaternion_to_rotation(q).matrix() - r.matrix()).norm());
    }
  }
  o.require(det_err <= 1e-12, "|det - 1| " + fmt("%.3g", det_err));
  o.require(orth_err <= 1e-11, "orthogonality " + fmt("%.3g", orth_err));
  o.require(norm_err <= 1e-11, "| |Q| - 1 | " + fmt("%.3g", norm_err));
  o.require(agree <= 1e-8, "Q vs R " + fmt("%.3g", agree));
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("|det-1| %.2g", det_err) + fmt(", |RtR-I| %.2g", orth_err) +
              fmt(", ||Q|-1| %.2g", norm_err) + fmt(", |R(Q)-R| %.2g", agree);
  return o;
}

Mat3 diag(double a, double b, double c)
{
  return Vec3(a, b, c).asDiagonal().toDenseMatrix();
}

Outcome criterion9()
{
  Outcome o;
  Mat3 lock;
  lock << 0, 0, 1,
          0, 1, 0,
          -1, 0, 0;
  const RotationMatrix gimbal = validate_rotation(lock);
  o.require(throws([&] { rotation_to_euler(gimbal); }, ErrorCode::GimbalLock), "gimbal-lock matrix");
  const Mat3 axis_cases[4] = {Mat3::Identity(), diag(1, -1, -1), diag(-1, 1, -1), diag(-1, -1, 1)};
  for (const Mat3& m : axis_cases) {
    const RotationMatrix r = validate_rotation(m);
    o.require(throws([&] { rotation_to_angle_axis(r); }, ErrorCode::UndefinedAxis),
              "angle-axis diag(" + fmt("%g", m(0, 0)) + "," + fmt("%g", m(1, 1)) + "," + fmt("%g", m(2, 2)) + ")");
  }
  for (int i = 1; i < 4; ++i) {
    const RotationMatrix r = validate_rotation(axis_cases[i]);
    o.require(throws([&] { rotation_to_rodriguez(r); }, ErrorCode::Singular180), "Rodriguez half turn");
    o.require(throws([&] { rotation_to_rodriguez_resolvent(r); }, ErrorCode::Singular180),
              "Rodriguez resolvent half turn");
  }

  Sampler rng(9);
  int spurious = 0;
  for (int n = 0; n < 10000; ++n) {
    const double a = rng.uniform(1e-3, 179.0 * kDeg);
    const RotationMatrix r = angle_axis_to_rotation({a, rng.unit_vector()});
    try {
      rotation_to_angle_axis(r);
      rotation_to_rodriguez(r);
      rotation_to_rodriguez_resolvent(r);
      rotation_to_quaternion(r);
      if (std::hypot(r(2, 1), r(2, 2)) >= 1e-7) {
        rotation_to_euler(r);
      }
    }
    catch (const Error&) {
      ++spurious;
    }
  }
  o.require(spurious == 0, std::to_string(spurious) + " spurious errors in sweep");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("8 catalogue matrices rejected, ") +
              std::to_string(spurious) + " spurious errors in 10000-sample sweep";
  return o;
}

Outcome criterion10()
{
  Outcome o;
  Sampler rng(10);
  double worst_h = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const UnitQuaternion q = rng.quaternion();
    const Vec3 vi = rng.unit_vector();
    const VectorPair pair{vi, body_from_inertial(quaternion_to_rotation(q), vi)};
    worst_h = std::max(worst_h, (measurement_output_matrix(pair) * q.as_vector()).norm());
  }
  o.require(worst_h <= 1e-10, "|HQ| " + fmt("%.3g", worst_h));

  const sim::Scenario s = sim::builtin_example(1);
  const OmegaProfile omega = s.profile();
  const double h = 1e-5;
  UnitQuaternion q = rotation_to_quaternion(s.r0);
  double worst_acc = 0.0;
  for (std::size_t k = 0; k < s.step_count(); ++k) {
    const double t = static_cast<double>(k) * s.dt;
    if (k % 500 == 250) {
      const Quat4 second = magnus4_increment(omega, t, h) + magnus4_increment(omega, t, -h);
      const Quat4 qdd = (1.0 / (h * h)) * qmul(q.value(), second);
      const Vec3 acc = rotational_acceleration(q.value(), quaternion_derivative(q, omega(t)), qdd);
      worst_acc = std::max(worst_acc, (acc - s.omega_rate_at(t)).lpNorm<Eigen::Infinity>());
    }
    q = propagate_quaternion_magnus4(q, omega, t, s.dt);
  }
  o.require(worst_acc <= 1e-5, "rotational acceleration off by " + fmt("%.3g", worst_acc));
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max |HQ| %.2g", worst_h) +
              fmt(", max |acc - dOmega/dt| %.2g", worst_acc);
  return o;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome criterion11()
{
  Outcome o;
  const std::string a = "acceptance_run_a.csv", b = "acceptance_run_b.csv";
  for (const std::string& path : {a, b}) {
    const std::string cmd = std::string(ATTITUDE_SIM_EXE) + " run --example 1 --quiet --out " + path;
    o.require(std::system(cmd.c_str()) == 0, "command failed: " + cmd);
  }
  const std::string ca = read_file(a), cb = read_file(b);
  o.require(!ca.empty(), "empty output");
  o.require(ca == cb, "outputs differ");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(ca.size()) + " bytes, identical";
  std::remove(a.c_str());
  std::remove(b.c_str());
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
  double limit_ms;
};

}  // namespace

int main()
{
  const Criterion criteria[] = {
      {1, "example 1 initial attitude fixture", criterion1, 1.0},
      {2, "example 2 initial attitude fixture", criterion2, 0.0},
      {3, "quaternion to rotation fixture", criterion3, 0.0},
      {4, "round-trip property suite", criterion4, 30000.0},
      {5, "identity suite and weighted bound", criterion5, 10000.0},
      {6, "example 1 tracking", criterion6, 10000.0},
      {7, "example 2 Euler divergence", criterion7, 10000.0},
      {8, "discrete propagator hygiene", criterion8, 60000.0},
      {9, "singularity catalogue", criterion9, 0.0},
      {10, "measurement model", criterion10, 0.0},
      {11, "determinism", criterion11, 0.0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    }
    catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0.0 && ms > c.limit_ms) {
      o.pass = false;
      o.detail += fmt("; runtime %.3f ms over limit", ms);
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%2d] %s  %-36s %10.3f ms  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, ms, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
