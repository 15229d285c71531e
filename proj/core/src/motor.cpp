// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/motor.hpp"

namespace gatween {

MultivectorPGA pga_rotor(const Quaternion& q) {
  MultivectorPGA r;
  r.c[pga::kScalar] = q.w;
  r.c[pga::kE12] = -q.z;
  r.c[pga::kE13] = q.y;
  r.c[pga::kE23] = -q.x;
  return r;
}

MultivectorPGA pga_translator(const Vec3& t) {
  MultivectorPGA tr;
  tr.c[pga::kScalar] = 1.0;
  tr.c[pga::kE01] = -0.5 * t.x;
  tr.c[pga::kE02] = -0.5 * t.y;
  tr.c[pga::kE03] = -0.5 * t.z;
  return tr;
}

MultivectorPGA pga_motor(const Pose& p) { return gp(pga_translator(p.t), pga_rotor(p.q)); }

MultivectorPGA pga_point(const Vec3& p) {
  MultivectorPGA x;
  x.c[pga::kE123] = 1.0;
  x.c[pga::kE023] = -p.x;
  x.c[pga::kE013] = p.y;
  x.c[pga::kE012] = -p.z;
  return x;
}

Vec3 pga_unpoint(const MultivectorPGA& x) {
  const double w = x.c[pga::kE123];
  return {-x.c[pga::kE023] / w, x.c[pga::kE013] / w, -x.c[pga::kE012] / w};
}

Vec3 pga_apply_point(const MultivectorPGA& m, const Vec3& p) {
  return pga_unpoint(sandwich(m, pga_point(p)));
}

MultivectorCGA cga_rotor(const Quaternion& q) {
  MultivectorCGA r;
  r.c[cga::kScalar] = q.w;
  r.c[cga::kE12] = -q.z;
  r.c[cga::kE13] = q.y;
  r.c[cga::kE23] = -q.x;
  return r;
}

MultivectorCGA cga_translator(const Vec3& t) {
  // 1 - 0.5 t einf with einf = e4 + e5.
  MultivectorCGA tr;
  tr.c[cga::kScalar] = 1.0;
  tr.c[cga::kE14] = -0.5 * t.x;
  tr.c[cga::kE15] = -0.5 * t.x;
  tr.c[cga::kE24] = -0.5 * t.y;
  tr.c[cga::kE25] = -0.5 * t.y;
  tr.c[cga::kE34] = -0.5 * t.z;
  tr.c[cga::kE35] = -0.5 * t.z;
  return tr;
}

MultivectorCGA cga_motor(const Pose& p) { return gp(cga_translator(p.t), cga_rotor(p.q)); }

MultivectorCGA cga_point(const Vec3& p) {
  const double half_sq = 0.5 * p.dot(p);
  MultivectorCGA x;
  x.c[cga::kE1] = p.x;
  x.c[cga::kE2] = p.y;
  x.c[cga::kE3] = p.z;
  x.c[cga::kE4] = half_sq - 0.5;
  x.c[cga::kE5] = half_sq + 0.5;
  return x;
}

Vec3 cga_unpoint(const MultivectorCGA& x) {
  // Normalizer is -X . einf = e5 coefficient minus e4 coefficient.
  const double w = x.c[cga::kE5] - x.c[cga::kE4];
  return {x.c[cga::kE1] / w, x.c[cga::kE2] / w, x.c[cga::kE3] / w};
}

Vec3 cga_apply_point(const MultivectorCGA& m, const Vec3& p) {
  return cga_unpoint(sandwich(m, cga_point(p)));
}

}  // namespace gatween
