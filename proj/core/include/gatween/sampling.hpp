// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "gatween/pose.hpp"

namespace gatween {

// Deterministic sample helpers. All draws go through an explicit
// bits-to-double mapping rather than std::uniform_real_distribution,
// whose output is implementation defined.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Vec3 random_vec3(std::mt19937_64& rng, double scale) {
  return {(2.0 * uniform01(rng) - 1.0) * scale, (2.0 * uniform01(rng) - 1.0) * scale,
          (2.0 * uniform01(rng) - 1.0) * scale};
}

// Uniformly distributed unit quaternion (subgroup algorithm).
inline Quaternion random_unit_quaternion(std::mt19937_64& rng) {
  constexpr double kTwoPi = 6.28318530717958647692;
  const double u1 = uniform01(rng);
  const double u2 = kTwoPi * uniform01(rng);
  const double u3 = kTwoPi * uniform01(rng);
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  return {a * std::sin(u2), a * std::cos(u2), b * std::sin(u3), b * std::cos(u3)};
}

inline Pose random_pose(std::mt19937_64& rng, double translation_scale = 10.0) {
  return {random_vec3(rng, translation_scale), random_unit_quaternion(rng)};
}

}  // namespace gatween
