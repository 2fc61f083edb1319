/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/sampling.hpp"

#include <cmath>
#include <numbers>

#include "attitude/representations.hpp"

namespace attitude {

double Sampler::uniform(double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

UnitQuaternion Sampler::quaternion()
{
  const double u1 = uniform(0.0, 1.0);
  const double a = 2.0 * std::numbers::pi * uniform(0.0, 1.0);
  const double b = 2.0 * std::numbers::pi * uniform(0.0, 1.0);
  const double s1 = std::sqrt(1.0 - u1), s2 = std::sqrt(u1);
  return normalize(Quat4(s2 * std::cos(b), s1 * std::sin(a), s1 * std::cos(a), s2 * std::sin(b)));
}

RotationMatrix Sampler::rotation()
{
  return quaternion_to_rotation(quaternion());
}

Vec3 Sampler::unit_vector()
{
  const double z = uniform(-1.0, 1.0);
  const double phi = 2.0 * std::numbers::pi * uniform(0.0, 1.0);
  const double r = std::sqrt(1.0 - z * z);
  return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

Vec3 Sampler::vector(double scale)
{
  const double x = uniform(-scale, scale);
  const double y = uniform(-scale, scale);
  const double z = uniform(-scale, scale);
  return Vec3(x, y, z);
}

}  // namespace attitude
