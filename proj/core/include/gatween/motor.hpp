// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gatween/errors.hpp"
#include "gatween/multivector.hpp"
#include "gatween/pose.hpp"
#include "gatween/quaternion.hpp"
#include "gatween/vec3.hpp"

namespace gatween {

// Motors are even-grade multivectors representing rigid transforms,
// composed as translator * rotor. Points are embedded per algebra,
// transformed by the sandwich M X ~M, and projected back.
//
// PGA embeds a point p as the trivector
//   e123 - p.x e023 + p.y e013 - p.z e012
// CGA embeds it as the null vector
//   p + 0.5 |p|^2 einf + eo,  einf = e4 + e5,  eo = 0.5 (e5 - e4)

MultivectorPGA pga_rotor(const Quaternion& q);
MultivectorPGA pga_translator(const Vec3& t);
MultivectorPGA pga_motor(const Pose& p);
MultivectorPGA pga_point(const Vec3& p);
Vec3 pga_unpoint(const MultivectorPGA& x);
Vec3 pga_apply_point(const MultivectorPGA& m, const Vec3& p);

MultivectorCGA cga_rotor(const Quaternion& q);
MultivectorCGA cga_translator(const Vec3& t);
MultivectorCGA cga_motor(const Pose& p);
MultivectorCGA cga_point(const Vec3& p);
Vec3 cga_unpoint(const MultivectorCGA& x);
Vec3 cga_apply_point(const MultivectorCGA& m, const Vec3& p);

template <typename Traits>
Multivector<Traits> sandwich(const Multivector<Traits>& m, const Multivector<Traits>& x) {
  return gp(gp(m, x), m.reverse());
}

// True when every odd-grade coefficient is below tol.
template <typename Traits>
bool is_motor(const Multivector<Traits>& m, double tol = kUnitTol) {
  return m.max_abs_of_odd_grades() <= tol;
}

// Scalar part of m ~m, the squared weight of the motor.
template <typename Traits>
double motor_weight2(const Multivector<Traits>& m) {
  return gp(m, m.reverse()).scalar_part();
}

template <typename Traits>
bool is_unit_motor(const Multivector<Traits>& m, double tol = kUnitTol) {
  const double s = motor_weight2(m);
  const double dev = s < 1.0 ? 1.0 - s : s - 1.0;
  return is_motor(m, tol) && dev <= 2.0 * tol;
}

// Exact motor renormalization. For a blended motor M, the product
// M ~M equals s + G with s scalar and G a null blade (G^2 = 0); then
//   M' = M (1 - G / (2s)) / sqrt(s)
// satisfies M' ~M' = 1 exactly and is a fixed point of the map.
// Throws DegenerateBlend when s falls below 1e-12.
template <typename Traits>
Multivector<Traits> normalize_motor(const Multivector<Traits>& m) {
  const Multivector<Traits> n = gp(m, m.reverse());
  const double s = n.scalar_part();
  if (!(s > 1e-12)) throw DegenerateBlend("normalize_motor: blend weight collapsed to zero");
  Multivector<Traits> corr = n * (-1.0 / (2.0 * s));  // -G/(2s) away from scalar slot
  corr.c[0] = 1.0;
  return gp(m, corr) * (1.0 / std::sqrt(s));
}

}  // namespace gatween
