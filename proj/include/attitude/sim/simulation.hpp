/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "attitude/representations.hpp"
#include "attitude/sim/scenario.hpp"

namespace attitude::sim {

/// The integrated representations compared against the exact SO(3) truth.
enum class Track { Euler = 0, Rodriguez = 1, Quat = 2, QuatExact = 3 };
inline constexpr std::size_t kTrackCount = 4;

Method track_method(Track t);

struct TrajectorySample {
  double t = 0.0;
  RotationMatrix r;
  std::optional<EulerAngles> xi;
  std::optional<RodriguezVector> rho;
  std::optional<UnitQuaternion> q;
  std::optional<UnitQuaternion> q_exact;
  /// ||R_truth||_I - ||R_method||_I per track, NaN when absent.
  std::array<double, kTrackCount> divergence{};
};

struct TrackSummary {
  bool requested = false;
  bool failed = false;
  double failure_time = 0.0;
  ErrorCode failure_cause = ErrorCode::IntegrationFailure;
  std::string failure_reason;
  double max_abs_divergence = 0.0;
  /// Largest ||R_truth - R_method||_F over emitted rows.
  double max_frobenius = 0.0;
};

struct RunOutput {
  Scenario scenario;
  std::vector<TrajectorySample> rows;
  std::array<TrackSummary, kTrackCount> tracks;
  double max_truth_orthogonality = 0.0;

  const TrackSummary& summary(Track t) const { return tracks[static_cast<std::size_t>(t)]; }
};

/// Truth by exact SO(3) steps; every requested method integrated from the
/// mapped initial attitude. A failing method stops and is marked; the others
/// continue.
RunOutput run_simulation(const Scenario& s, std::size_t stride = 1);

/// The attitude a sample's track maps to, if present.
std::optional<RotationMatrix> track_rotation(const TrajectorySample& row, Track t);

}  // namespace attitude::sim
