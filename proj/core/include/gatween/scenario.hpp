// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gatween/engines.hpp"
#include "gatween/stream.hpp"
#include "gatween/trajectory.hpp"

namespace gatween {

// Parsed scenario document. JSON syntax, strict schema: unknown keys
// are rejected, as are values outside their documented ranges.
//
//   {
//     "trajectory": [
//       {"time": 0.0, "position": [0, 0, 0], "orientation": [0, 0, 0, 1]},
//       ...
//     ],
//     "engines": ["baseline", "dualquat", ...],
//     "updates_per_sec": [20],
//     "render_rate_hz": 60,
//     "channel": {"latency_s": 0, "drop_prob": 0, "float_width_bytes": 8},
//     "seed": 0,
//     "users": 1
//   }
//
// trajectory, engines, updates_per_sec, and render_rate_hz are
// required; channel, seed, and users are optional with the defaults
// shown. Orientations must be unit quaternions within 1e-6.
struct ScenarioConfig {
  Trajectory trajectory;
  std::vector<EngineKind> engines;
  std::vector<double> update_rates;
  double render_rate_hz = 60.0;
  ChannelConfig channel;  // updates_per_sec is filled per run
  int users = 1;
};

// Both throw ScenarioError. Parse errors carry the position reported
// by the JSON parser; schema errors name the offending key.
ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace gatween
