// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/engines.hpp"

#include <cmath>

#include "gatween/codec.hpp"
#include "gatween/dual_quaternion.hpp"
#include "gatween/errors.hpp"
#include "gatween/motor.hpp"

namespace gatween {

namespace {

void validate(const InterpRequest& req, const char* who) {
  require_unit(req.p0.q, who);
  require_unit(req.p1.q, who);
  if (!(req.a >= 0.0 && req.a <= 1.0)) {
    throw Error(std::string(who) + ": blend parameter outside [0, 1]");
  }
}

// Sign of the 4D dot between the rotor parts, used to pick the
// shorter rotation arc before a coefficient blend.
template <typename MV>
double rotor_dot(const MV& a, const MV& b, std::size_t e12, std::size_t e13, std::size_t e23) {
  return a.c[0] * b.c[0] + a.c[e12] * b.c[e12] + a.c[e13] * b.c[e13] + a.c[e23] * b.c[e23];
}

}  // namespace

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::Baseline: return "baseline";
    case EngineKind::DualQuat: return "dualquat";
    case EngineKind::MotorLerpPGA: return "motor_lerp_pga";
    case EngineKind::MotorLerpCGA: return "motor_lerp_cga";
    case EngineKind::MotorSlerp: return "motor_slerp";
  }
  return "unknown";
}

std::optional<EngineKind> engine_from_name(std::string_view name) {
  for (EngineKind kind : kAllEngines) {
    if (engine_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Pose interp_baseline(const InterpRequest& req) {
  validate(req, "interp_baseline");
  const Vec3 t = req.p0.t * (1.0 - req.a) + req.p1.t * req.a;
  return Pose{t, slerp(req.p0.q, req.p1.q, req.a)}.canonicalized();
}

Pose interp_dq(const InterpRequest& req) {
  validate(req, "interp_dq");
  return dq_to_pose(sclerp(pose_to_dq(req.p0), pose_to_dq(req.p1), req.a));
}

Pose interp_motor_lerp_pga(const InterpRequest& req) {
  validate(req, "interp_motor_lerp_pga");
  const MultivectorPGA m0 = pose_to_pga_motor(req.p0);
  MultivectorPGA m1 = pose_to_pga_motor(req.p1);
  if (rotor_dot(m0, m1, pga::kE12, pga::kE13, pga::kE23) < 0.0) m1 = -m1;
  const MultivectorPGA blend = m0 * (1.0 - req.a) + m1 * req.a;
  return pga_motor_to_pose(normalize_motor(blend));
}

Pose interp_motor_lerp_cga(const InterpRequest& req) {
  validate(req, "interp_motor_lerp_cga");
  const MultivectorCGA m0 = pose_to_cga_motor(req.p0);
  MultivectorCGA m1 = pose_to_cga_motor(req.p1);
  if (rotor_dot(m0, m1, cga::kE12, cga::kE13, cga::kE23) < 0.0) m1 = -m1;
  const MultivectorCGA blend = m0 * (1.0 - req.a) + m1 * req.a;
  return cga_motor_to_pose(normalize_motor(blend));
}

Pose interp_motor_slerp(const InterpRequest& req) {
  validate(req, "interp_motor_slerp");
  // Screw interpolation expressed on motor coefficients through the
  // dual quaternion isomorphism.
  const DualQuaternion d0 = pga_motor_to_dq(pose_to_pga_motor(req.p0));
  const DualQuaternion d1 = pga_motor_to_dq(pose_to_pga_motor(req.p1));
  const MultivectorPGA out = dq_to_pga_motor(sclerp(d0, d1, req.a));
  return pga_motor_to_pose(out);
}

Pose interpolate(EngineKind kind, const InterpRequest& req) {
  switch (kind) {
    case EngineKind::Baseline: return interp_baseline(req);
    case EngineKind::DualQuat: return interp_dq(req);
    case EngineKind::MotorLerpPGA: return interp_motor_lerp_pga(req);
    case EngineKind::MotorLerpCGA: return interp_motor_lerp_cga(req);
    case EngineKind::MotorSlerp: return interp_motor_slerp(req);
  }
  throw Error("interpolate: unknown engine kind");
}

}  // namespace gatween
