/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attitude/kinematics.hpp"
#include "attitude/so3.hpp"

namespace attitude::sim {

enum class Method { So3Exact, EulerRk4, RodriguezRk4, QuatRk4, QuatExact };

inline constexpr std::array<Method, 5> kAllMethods = {Method::So3Exact, Method::EulerRk4,
                                                      Method::RodriguezRk4, Method::QuatRk4,
                                                      Method::QuatExact};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// amp * sin(freq * t + phase).
struct Sinusoid {
  double amp = 0.0;
  double freq = 0.0;
  double phase = 0.0;
};

struct Scenario {
  std::array<Sinusoid, 3> omega{};
  RotationMatrix r0;
  double dt = 1e-3;
  double t_end = 30.0;
  std::vector<Method> integrators{kAllMethods.begin(), kAllMethods.end()};
  std::int64_t seed = 0;

  AngularVelocity omega_at(double t) const;
  /// Analytic time derivative of omega_at.
  Vec3 omega_rate_at(double t) const;
  OmegaProfile profile() const;
  bool runs(Method m) const;
  /// Number of steps, floor(t_end / dt).
  std::size_t step_count() const;
};

/// Throws ValidationError naming the violated invariant.
void validate(const Scenario& s);

/// Parses the JSON scenario format. Throws ParseError, ValidationError.
Scenario parse_scenario(std::string_view text);
/// Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const Scenario& s);

/// The two reference runs, n = 1 or 2. Throws UnknownExample.
Scenario builtin_example(int n);

}  // namespace attitude::sim
