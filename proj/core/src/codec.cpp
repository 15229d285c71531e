// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/codec.hpp"

#include <algorithm>

#include "gatween/errors.hpp"
#include "gatween/motor.hpp"

namespace gatween {

namespace {

Quaternion rotor_part_pga(const MultivectorPGA& m) {
  return {-m.c[pga::kE23], m.c[pga::kE13], -m.c[pga::kE12], m.c[pga::kScalar]};
}

Quaternion rotor_part_cga(const MultivectorCGA& m) {
  return {-m.c[cga::kE23], m.c[cga::kE13], -m.c[cga::kE12], m.c[cga::kScalar]};
}

}  // namespace

DualQuaternion pose_to_dq(const Pose& p) {
  require_unit(p.q, "pose_to_dq");
  const Quaternion t = {p.t.x, p.t.y, p.t.z, 0.0};
  return {p.q, 0.5 * (t * p.q)};
}

Pose dq_to_pose(const DualQuaternion& d) {
  require_unit(d, "dq_to_pose");
  return Pose{d.translation(), d.real.normalized()}.canonicalized();
}

MultivectorPGA pose_to_pga_motor(const Pose& p) {
  require_unit(p.q, "pose_to_pga_motor");
  return pga_motor(p);
}

Pose pga_motor_to_pose(const MultivectorPGA& m) {
  if (!is_motor(m)) throw NotAMotor("pga_motor_to_pose: odd-grade content above tolerance");
  if (!is_unit_motor(m)) throw NonUnitInput("pga_motor_to_pose: motor is not unit weight");
  // The rotor lives on {1, e12, e13, e23} untouched by the translator
  // factor; renormalize to shed float drift.
  Quaternion q = rotor_part_pga(m);
  const double n = q.norm();
  if (n < kUnitTol) throw NotAMotor("pga_motor_to_pose: rotor part vanished");
  q = q * (1.0 / n);
  // Peeling the rotor off leaves the translator: m ~R = w (1 + x e01
  // + y e02 + z e03); divide by the scalar to drop the weight.
  const MultivectorPGA t = gp(m, pga_rotor(q).reverse());
  const double w = t.c[pga::kScalar];
  const Vec3 trans = {-2.0 * t.c[pga::kE01] / w, -2.0 * t.c[pga::kE02] / w,
                      -2.0 * t.c[pga::kE03] / w};
  return Pose{trans, q}.canonicalized();
}

MultivectorCGA pose_to_cga_motor(const Pose& p) {
  require_unit(p.q, "pose_to_cga_motor");
  return cga_motor(p);
}

Pose cga_motor_to_pose(const MultivectorCGA& m) {
  if (!is_motor(m)) throw NotAMotor("cga_motor_to_pose: odd-grade content above tolerance");
  if (!is_unit_motor(m)) throw NonUnitInput("cga_motor_to_pose: motor is not unit weight");
  Quaternion q = rotor_part_cga(m);
  const double n = q.norm();
  if (n < kUnitTol) throw NotAMotor("cga_motor_to_pose: rotor part vanished");
  q = q * (1.0 / n);
  const MultivectorCGA t = gp(m, cga_rotor(q).reverse());
  const double w = t.c[cga::kScalar];
  // Contracting the translator onto e5 - e4 exposes the translation
  // as a spatial vector.
  MultivectorCGA probe;
  probe.c[cga::kE5] = 1.0;
  probe.c[cga::kE4] = -1.0;
  const MultivectorCGA tv = inner_hestenes(t, probe);
  const Vec3 trans = {tv.c[cga::kE1] / w, tv.c[cga::kE2] / w, tv.c[cga::kE3] / w};
  return Pose{trans, q}.canonicalized();
}

DualQuaternion pga_motor_to_dq(const MultivectorPGA& m) {
  return {{-m.c[pga::kE23], m.c[pga::kE13], -m.c[pga::kE12], m.c[pga::kScalar]},
          {-m.c[pga::kE01], -m.c[pga::kE02], -m.c[pga::kE03], -m.c[pga::kE0123]}};
}

MultivectorPGA dq_to_pga_motor(const DualQuaternion& d) {
  MultivectorPGA m;
  m.c[pga::kScalar] = d.real.w;
  m.c[pga::kE23] = -d.real.x;
  m.c[pga::kE13] = d.real.y;
  m.c[pga::kE12] = -d.real.z;
  m.c[pga::kE01] = -d.dual.x;
  m.c[pga::kE02] = -d.dual.y;
  m.c[pga::kE03] = -d.dual.z;
  m.c[pga::kE0123] = -d.dual.w;
  return m;
}

double cross_encode_check(const Pose& p) {
  const Pose via_dq = dq_to_pose(pose_to_dq(p));
  const Pose via_pga = pga_motor_to_pose(pose_to_pga_motor(p));
  const Pose via_cga = cga_motor_to_pose(pose_to_cga_motor(p));
  const Pose via_iso = dq_to_pose(pga_motor_to_dq(pose_to_pga_motor(p)));
  const Pose* all[] = {&via_dq, &via_pga, &via_cga, &via_iso};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      worst = std::max(worst, pose_deviation(*all[i], *all[j]));
    }
  }
  return worst;
}

}  // namespace gatween
