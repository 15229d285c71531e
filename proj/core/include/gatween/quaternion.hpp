// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

#include "gatween/errors.hpp"
#include "gatween/vec3.hpp"

namespace gatween {

// Unit-norm tolerance shared by every operation that requires a unit
// quaternion, dual quaternion, or motor as input.
inline constexpr double kUnitTol = 1e-6;

struct Quaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 1.0;

  static constexpr Quaternion identity() { return {0.0, 0.0, 0.0, 1.0}; }

  static Quaternion from_axis_angle(const Vec3& axis, double angle) {
    const Vec3 u = axis.normalized();
    const double h = 0.5 * angle;
    const double s = std::sin(h);
    return {u.x * s, u.y * s, u.z * s, std::cos(h)};
  }

  constexpr Quaternion conjugate() const { return {-x, -y, -z, w}; }

  constexpr double dot(const Quaternion& o) const {
    return x * o.x + y * o.y + z * o.z + w * o.w;
  }

  double norm() const { return std::sqrt(dot(*this)); }

  Quaternion normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n, w / n};
  }

  constexpr Vec3 vec() const { return {x, y, z}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {x + o.x, y + o.y, z + o.z, w + o.w};
  }

  constexpr Quaternion operator-(const Quaternion& o) const {
    return {x - o.x, y - o.y, z - o.z, w - o.w};
  }

  constexpr Quaternion operator-() const { return {-x, -y, -z, -w}; }

  constexpr Quaternion operator*(double s) const { return {x * s, y * s, z * s, w * s}; }

  // Hamilton product.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w,
            w * o.w - x * o.x - y * o.y - z * o.z};
  }

  // Sign-canonical representative of the same rotation: w > 0, or if
  // w is exactly zero, the first nonzero of (x, y, z) is positive.
  constexpr Quaternion canonicalized() const {
    double lead = w;
    if (lead == 0.0) lead = x;
    if (lead == 0.0) lead = y;
    if (lead == 0.0) lead = z;
    return lead < 0.0 ? -*this : *this;
  }

  bool is_unit(double tol = kUnitTol) const { return std::abs(norm() - 1.0) <= tol; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline void require_unit(const Quaternion& q, const char* who) {
  if (!q.is_unit()) throw NonUnitInput(std::string(who) + ": quaternion is not unit norm");
}

inline Vec3 rotate_point(const Quaternion& q, const Vec3& p) {
  require_unit(q, "rotate_point");
  // q p q* expanded via the cross-product form.
  const Vec3 u = q.vec();
  const Vec3 c = u.cross(p);
  return p + 2.0 * (q.w * c + u.cross(c));
}

// Angle of the relative rotation between two unit quaternions, in
// radians within [0, pi]. The atan2 form stays accurate for angles
// near both zero and pi.
inline double angle_between(const Quaternion& q, const Quaternion& r) {
  require_unit(q, "angle_between");
  require_unit(r, "angle_between");
  const Quaternion d = q.conjugate() * r;
  return 2.0 * std::atan2(d.vec().norm(), std::abs(d.w));
}

// Shortest-arc spherical interpolation. Constant angular velocity in
// the interpolation parameter; falls back to normalized lerp only when
// the inputs are nearly parallel.
inline Quaternion slerp(const Quaternion& q, const Quaternion& r, double a) {
  require_unit(q, "slerp");
  require_unit(r, "slerp");
  double d = q.dot(r);
  Quaternion rr = r;
  if (d < 0.0) {
    rr = -r;
    d = -d;
  }
  d = std::min(d, 1.0);
  const double theta = std::acos(d);
  if (theta < 1e-9) {
    Quaternion out = q * (1.0 - a) + rr * a;
    return out.normalized();
  }
  const double s = std::sin(theta);
  const double wa = std::sin((1.0 - a) * theta) / s;
  const double wb = std::sin(a * theta) / s;
  return q * wa + rr * wb;
}

}  // namespace gatween
