// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "gatween/errors.hpp"
#include "gatween/quaternion.hpp"
#include "gatween/vec3.hpp"

namespace gatween {

// Dual quaternion d = real + eps * dual. A unit dual quaternion
// (|real| = 1, dot(real, dual) = 0) encodes a rigid transform whose
// rotation is the real part and whose translation is 2 * dual * real*.
struct DualQuaternion {
  Quaternion real = Quaternion::identity();
  Quaternion dual = {0.0, 0.0, 0.0, 0.0};

  static constexpr DualQuaternion identity() { return {}; }

  constexpr DualQuaternion operator+(const DualQuaternion& o) const {
    return {real + o.real, dual + o.dual};
  }

  constexpr DualQuaternion operator-() const { return {-real, -dual}; }

  constexpr DualQuaternion operator*(double s) const { return {real * s, dual * s}; }

  constexpr DualQuaternion operator*(const DualQuaternion& o) const {
    return {real * o.real, real * o.dual + dual * o.real};
  }

  // Quaternion conjugate of both parts. For a unit dual quaternion
  // this is the inverse transform.
  constexpr DualQuaternion conjugate() const { return {real.conjugate(), dual.conjugate()}; }

  bool is_unit(double tol = kUnitTol) const {
    return real.is_unit(tol) && std::abs(real.dot(dual)) <= tol;
  }

  // Rescales the real part to unit norm and projects the dual part
  // onto the orthogonality constraint dot(real, dual) = 0.
  DualQuaternion normalized() const {
    const double n = real.norm();
    if (n < 1e-12) throw DegenerateBlend("DualQuaternion::normalized: real part is zero");
    Quaternion r = real * (1.0 / n);
    Quaternion d = dual * (1.0 / n);
    d = d - r * r.dot(d);
    return {r, d};
  }

  constexpr Quaternion rotation() const { return real; }

  Vec3 translation() const {
    const Quaternion t = dual * real.conjugate();
    return 2.0 * t.vec();
  }
};

inline void require_unit(const DualQuaternion& d, const char* who) {
  if (!d.is_unit()) throw NonUnitInput(std::string(who) + ": dual quaternion is not unit norm");
}

inline Vec3 apply_point(const DualQuaternion& d, const Vec3& p) {
  require_unit(d, "apply_point");
  return rotate_point(d.real, p) + d.translation();
}

// Screw power d^a of a unit dual quaternion. Decomposes d into screw
// parameters (axis, angle, pitch, moment), scales angle and pitch by
// a, and reassembles. d^0 = identity, d^1 = d, and powers compose
// additively: d^a * d^b = d^(a+b).
DualQuaternion dq_pow(const DualQuaternion& d, double a);

// Screw linear interpolation d1 * (d1^-1 d2)^a, taking the shorter of
// the two rotation arcs. At a = 0 returns d1, at a = 1 returns d2 up
// to sign.
DualQuaternion sclerp(const DualQuaternion& d1, const DualQuaternion& d2, double a);

}  // namespace gatween
