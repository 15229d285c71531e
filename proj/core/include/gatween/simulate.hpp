// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gatween/engines.hpp"
#include "gatween/stream.hpp"
#include "gatween/trajectory.hpp"

namespace gatween {

struct RenderedFrame {
  std::size_t index = 0;  // render tick index
  double time = 0.0;      // playback time on the source timeline
  Pose pose;
};

struct SimReport {
  double bytes_per_sec = 0.0;
  double pos_rmse = 0.0;
  double ang_rmse_deg = 0.0;
  double jitter = 0.0;  // max second difference of rendered positions
  std::size_t frames_rendered = 0;
  EngineKind engine = EngineKind::Baseline;
  double per_frame_cost_ns = 0.0;
};

// Replays the arrival stream against a render clock and interpolates
// between the two buffered keyframes straddling each playback time.
//
// Playback runs one keyframe interval behind the newest data (the
// snapshot-interpolation buffer), with the interval inferred as the
// smallest t_send gap in the stream and the channel offset inferred
// as the smallest t_arrive - t_send. Ticks before the first arrival
// render nothing; past the newest buffered keyframe the last rendered
// pose is held. No extrapolation.
std::vector<RenderedFrame> reconstruct(const std::vector<ArrivedPacket>& stream,
                                       EngineKind engine, double render_rate_hz);

// Error metrics of a rendered stream against ground truth, sampled at
// the rendered playback times.
SimReport score(const std::vector<RenderedFrame>& rendered, const Trajectory& truth);

// As above, plus the bandwidth and engine fields filled in from the
// channel configuration.
SimReport score(const std::vector<RenderedFrame>& rendered, const Trajectory& truth,
                const ChannelConfig& cfg, EngineKind engine, int users);

struct SimRun {
  SimReport report;
  std::vector<RenderedFrame> frames;
};

// Full sender -> channel -> receiver pass for one engine at one update
// rate. per_frame_cost_ns is wall time of the reconstruction loop
// divided by frames rendered.
SimRun run_one(const Trajectory& traj, EngineKind engine, const ChannelConfig& cfg,
               double render_rate_hz, int users);

struct NamedTrajectory {
  std::string name;
  Trajectory traj;
};

struct MatrixRow {
  std::string trajectory;
  EngineKind engine = EngineKind::Baseline;
  double updates_per_sec = 0.0;
  SimReport report;
};

// Cartesian sweep: every trajectory x update rate x engine. Engines
// sharing a (trajectory, rate) cell see the identical arrival stream,
// so their metrics are directly comparable.
std::vector<MatrixRow> run_matrix(const std::vector<NamedTrajectory>& trajectories,
                                  const std::vector<EngineKind>& engines,
                                  const std::vector<double>& update_rates,
                                  const ChannelConfig& base, double render_rate_hz, int users);

// 100 * (1 - ours/soa), rounded to nearest integer percent.
long bandwidth_reduction_percent(double rate_ours, double rate_soa);

}  // namespace gatween
