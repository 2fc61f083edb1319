/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <random>

#include "attitude/quaternion.hpp"
#include "attitude/so3.hpp"

namespace attitude {

/// Seeded source of random attitudes and vectors.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  /// Uniform (Haar) distribution on S^3.
  UnitQuaternion quaternion();
  RotationMatrix rotation();
  /// Uniform direction on S^2.
  Vec3 unit_vector();
  /// Components uniform in [-scale, scale].
  Vec3 vector(double scale);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace attitude
