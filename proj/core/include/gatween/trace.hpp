// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gatween/engines.hpp"
#include "gatween/simulate.hpp"
#include "gatween/trajectory.hpp"

namespace gatween {

// Rendered-frame trace, one comma-separated row per frame:
//   frame_index, time_s, engine, px, py, pz, qx, qy, qz, qw,
//   err_pos_m, err_ang_deg
// preceded by a header row with those names. Reals are printed as
// shortest round-trip decimals, so equal inputs give equal bytes.
std::string format_trace(const std::vector<RenderedFrame>& frames, EngineKind engine,
                         const Trajectory& truth);

void write_trace_file(const std::string& path, const std::string& trace_text);

// Recovers the position RMSE recorded in a trace by reading the
// err_pos_m column back. Round-trip printing makes this agree with
// the generating report to the last bit.
double trace_pos_rmse(const std::string& trace_text);

}  // namespace gatween
