/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/sim/simulation.hpp"

#include <cmath>
#include <limits>

#include "attitude/error.hpp"
#include "attitude/kinematics.hpp"

namespace attitude::sim {

Method track_method(Track t)
{
  switch (t) {
    case Track::Euler: return Method::EulerRk4;
    case Track::Rodriguez: return Method::RodriguezRk4;
    case Track::Quat: return Method::QuatRk4;
    case Track::QuatExact: return Method::QuatExact;
  }
  return Method::So3Exact;
}

std::optional<RotationMatrix> track_rotation(const TrajectorySample& row, Track t)
{
  switch (t) {
    case Track::Euler:
      if (row.xi) return euler_to_rotation(*row.xi);
      break;
    case Track::Rodriguez:
      if (row.rho) return rodriguez_to_rotation(*row.rho);
      break;
    case Track::Quat:
      if (row.q) return quaternion_to_rotation(*row.q);
      break;
    case Track::QuatExact:
      if (row.q_exact) return quaternion_to_rotation(*row.q_exact);
      break;
  }
  return std::nullopt;
}

namespace {

constexpr std::array<Track, kTrackCount> kTracks = {Track::Euler, Track::Rodriguez, Track::Quat,
                                                     Track::QuatExact};

struct State {
  std::optional<EulerAngles> xi;
  std::optional<RodriguezVector> rho;
  std::optional<UnitQuaternion> q;
  std::optional<UnitQuaternion> q_exact;

  void clear(Track t)
  {
    switch (t) {
      case Track::Euler: xi.reset(); break;
      case Track::Rodriguez: rho.reset(); break;
      case Track::Quat: q.reset(); break;
      case Track::QuatExact: q_exact.reset(); break;
    }
  }
};

}  // namespace

RunOutput run_simulation(const Scenario& s, std::size_t stride)
{
  validate(s);
  if (stride == 0) {
    throw Error(ErrorCode::InvalidArgument, "output stride must be positive");
  }
  RunOutput out;
  out.scenario = s;
  const OmegaProfile omega = s.profile();
  const std::size_t n = s.step_count();
  const double dt = s.dt;

  auto& tracks = out.tracks;
  auto fail = [&](Track t, double time, ErrorCode cause, const char* what) {
    TrackSummary& ts = tracks[static_cast<std::size_t>(t)];
    ts.failed = true;
    ts.failure_time = time;
    ts.failure_cause = cause;
    ts.failure_reason = what;
  };

  State st;
  RotationMatrix truth = s.r0;
  for (Track t : kTracks) {
    tracks[static_cast<std::size_t>(t)].requested = s.runs(track_method(t));
  }
  auto requested = [&](Track t) { return tracks[static_cast<std::size_t>(t)].requested; };
  try {
    if (requested(Track::Euler)) st.xi = rotation_to_euler(s.r0);
  }
  catch (const Error& e) {
    fail(Track::Euler, 0.0, e.code(), e.what());
  }
  try {
    if (requested(Track::Rodriguez)) st.rho = rotation_to_rodriguez(s.r0);
  }
  catch (const Error& e) {
    fail(Track::Rodriguez, 0.0, e.code(), e.what());
  }
  if (requested(Track::Quat)) st.q = rotation_to_quaternion(s.r0);
  if (requested(Track::QuatExact)) st.q_exact = rotation_to_quaternion(s.r0);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.rows.reserve(n / stride + 1);
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (k % stride == 0) {
      TrajectorySample row;
      row.t = t;
      row.r = truth;
      row.xi = st.xi;
      row.rho = st.rho;
      row.q = st.q;
      row.q_exact = st.q_exact;
      const double d_truth = normalized_distance(truth);
      for (Track tr : kTracks) {
        const std::size_t i = static_cast<std::size_t>(tr);
        const auto r = track_rotation(row, tr);
        if (!r) {
          row.divergence[i] = nan;
          continue;
        }
        row.divergence[i] = d_truth - normalized_distance(*r);
        tracks[i].max_abs_divergence = std::max(tracks[i].max_abs_divergence, std::abs(row.divergence[i]));
        tracks[i].max_frobenius =
            std::max(tracks[i].max_frobenius, (truth.matrix() - r->matrix()).norm());
      }
      out.max_truth_orthogonality = std::max(out.max_truth_orthogonality, orthogonality_error(truth));
      out.rows.push_back(std::move(row));
    }
    if (k == n) {
      break;
    }

    truth = propagate_rotation_magnus4(truth, omega, t, dt);
    auto step = [&](Track tr, auto&& advance) {
      try {
        advance();
      }
      catch (const IntegrationFailure& e) {
        fail(tr, e.time(), e.cause(), e.what());
        st.clear(tr);
      }
      catch (const Error& e) {
        fail(tr, t, e.code(), e.what());
        st.clear(tr);
      }
    };
    if (st.xi) step(Track::Euler, [&] { st.xi = euler_rk4_step(*st.xi, omega, t, dt); });
    if (st.rho) step(Track::Rodriguez, [&] { st.rho = rodriguez_rk4_step(*st.rho, omega, t, dt); });
    if (st.q) step(Track::Quat, [&] { st.q = quaternion_rk4_step(*st.q, omega, t, dt); });
    if (st.q_exact) {
      step(Track::QuatExact, [&] { st.q_exact = propagate_quaternion_magnus4(*st.q_exact, omega, t, dt); });
    }
  }
  return out;
}

}  // namespace attitude::sim
