// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gatween/quaternion.hpp"
#include "gatween/vec3.hpp"

namespace gatween {

// Rigid pose: translation plus unit rotation quaternion. Acts on
// points as rotate-then-translate.
struct Pose {
  Vec3 t;
  Quaternion q = Quaternion::identity();

  static constexpr Pose identity() { return {}; }

  Pose canonicalized() const { return {t, q.canonicalized()}; }

  Vec3 apply(const Vec3& p) const { return rotate_point(q, p) + t; }

  // Composition: (a * b) applies b first, then a.
  Pose operator*(const Pose& o) const { return {rotate_point(q, o.t) + t, q * o.q}; }

  Pose inverse() const {
    const Quaternion qi = q.conjugate();
    return {rotate_point(qi, -t), qi};
  }
};

// Largest absolute difference over the seven pose components, after
// canonicalizing both rotation signs. Zero iff the poses coincide.
inline double pose_deviation(const Pose& a, const Pose& b) {
  const Quaternion qa = a.q.canonicalized();
  const Quaternion qb = b.q.canonicalized();
  double m = 0.0;
  const double diffs[7] = {a.t.x - b.t.x, a.t.y - b.t.y, a.t.z - b.t.z,
                           qa.x - qb.x,   qa.y - qb.y,   qa.z - qb.z,
                           qa.w - qb.w};
  for (double d : diffs) m = std::max(m, std::abs(d));
  return m;
}

}  // namespace gatween
