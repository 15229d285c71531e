// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "gatween/pose.hpp"

namespace gatween {

// Interpolation engines. All take two unit poses and a blend
// parameter in [0, 1], and return a sign-canonical pose that matches
// the endpoints exactly at a = 0 and a = 1.
enum class EngineKind {
  // Linear position blend plus quaternion slerp, the conventional
  // split treatment of translation and rotation.
  Baseline,
  // Screw interpolation of unit dual quaternions.
  DualQuat,
  // Normalized linear blend of PGA motors.
  MotorLerpPGA,
  // Normalized linear blend of CGA motors.
  MotorLerpCGA,
  // Screw interpolation carried out on motor coefficients.
  MotorSlerp,
};

inline constexpr std::array<EngineKind, 5> kAllEngines = {
    EngineKind::Baseline, EngineKind::DualQuat, EngineKind::MotorLerpPGA,
    EngineKind::MotorLerpCGA, EngineKind::MotorSlerp};

std::string_view engine_name(EngineKind kind);
std::optional<EngineKind> engine_from_name(std::string_view name);

struct InterpRequest {
  Pose p0;
  Pose p1;
  double a = 0.0;  // blend parameter, 0 = p0, 1 = p1
};

Pose interp_baseline(const InterpRequest& req);
Pose interp_dq(const InterpRequest& req);
Pose interp_motor_lerp_pga(const InterpRequest& req);
Pose interp_motor_lerp_cga(const InterpRequest& req);
Pose interp_motor_slerp(const InterpRequest& req);

Pose interpolate(EngineKind kind, const InterpRequest& req);

}  // namespace gatween
