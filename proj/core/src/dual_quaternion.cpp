// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/dual_quaternion.hpp"

namespace gatween {

namespace {

// Below this rotation-vector norm the screw axis is ill conditioned
// and the transform is treated as translation (plus a residual
// rotation handled by slerp from identity).
constexpr double kPureTranslationEps = 1e-7;

}  // namespace

DualQuaternion dq_pow(const DualQuaternion& d, double a) {
  require_unit(d, "dq_pow");

  // Work on the hemisphere with nonnegative real scalar so the screw
  // angle lands in [0, pi].
  DualQuaternion u = d;
  if (u.real.w < 0.0) u = -u;

  const Vec3 v0 = u.real.vec();
  const double s0 = v0.norm();

  if (s0 < kPureTranslationEps) {
    // Translation-dominated case: scale the translation linearly and
    // the (near-identity) rotation by slerp.
    const Vec3 t = u.translation();
    const Quaternion r = slerp(Quaternion::identity(), u.real, a);
    const Vec3 ta = t * a;
    const Quaternion tq = {ta.x, ta.y, ta.z, 0.0};
    return {r, 0.5 * (tq * r)};
  }

  const double half_angle = std::atan2(s0, u.real.w);
  const Vec3 axis = v0 / s0;
  const double half_pitch = -u.dual.w / s0;
  const Vec3 moment = (u.dual.vec() - axis * (half_pitch * u.real.w)) / s0;

  const double ha = a * half_angle;
  const double hp = a * half_pitch;
  const double ca = std::cos(ha);
  const double sa = std::sin(ha);

  const Vec3 rv = axis * sa;
  const Vec3 dv = moment * sa + axis * (hp * ca);
  return {{rv.x, rv.y, rv.z, ca}, {dv.x, dv.y, dv.z, -hp * sa}};
}

DualQuaternion sclerp(const DualQuaternion& d1, const DualQuaternion& d2, double a) {
  require_unit(d1, "sclerp");
  require_unit(d2, "sclerp");
  DualQuaternion rel = d1.conjugate() * d2;
  if (rel.real.w < 0.0) rel = -rel;
  return d1 * dq_pow(rel, a);
}

}  // namespace gatween
