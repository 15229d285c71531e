// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#include "gatween/errors.hpp"

namespace gatween {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Snap tolerance for a playback time landing exactly on a keyframe.
bool same_time(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

}  // namespace

std::vector<RenderedFrame> reconstruct(const std::vector<ArrivedPacket>& stream,
                                       EngineKind engine, double render_rate_hz) {
  if (stream.empty()) throw NoKeyframes("reconstruct: empty keyframe stream");
  if (!(render_rate_hz > 0.0)) throw Error("reconstruct: render rate must be positive");

  std::vector<const ArrivedPacket*> by_arrive;
  by_arrive.reserve(stream.size());
  for (const ArrivedPacket& ap : stream) by_arrive.push_back(&ap);
  std::stable_sort(by_arrive.begin(), by_arrive.end(),
                   [](const ArrivedPacket* a, const ArrivedPacket* b) {
                     return a->t_arrive < b->t_arrive;
                   });

  // Nominal keyframe interval: smallest t_send gap. Drops only widen
  // gaps, so any surviving adjacent pair recovers the true spacing.
  std::vector<double> sends;
  sends.reserve(stream.size());
  double channel_offset = std::numeric_limits<double>::infinity();
  for (const ArrivedPacket& ap : stream) {
    sends.push_back(ap.packet.t_send);
    channel_offset = std::min(channel_offset, ap.t_arrive - ap.packet.t_send);
  }
  std::sort(sends.begin(), sends.end());
  double interval = 0.0;
  for (std::size_t i = 1; i < sends.size(); ++i) {
    const double d = sends[i] - sends[i - 1];
    if (d > 0.0 && (interval == 0.0 || d < interval)) interval = d;
  }

  const double s0 = sends.front();
  const double s1 = sends.back();
  const double delay = interval + channel_offset;
  const auto ticks = static_cast<std::size_t>(std::floor((s1 - s0) * render_rate_hz + 1e-9));

  std::vector<RenderedFrame> out;
  out.reserve(ticks + 1);
  std::vector<const ArrivedPacket*> buffered;  // sorted by t_send
  buffered.reserve(stream.size());
  std::size_t next_arrival = 0;
  std::optional<Pose> last_rendered;

  for (std::size_t i = 0; i <= ticks; ++i) {
    const double tau = s0 + static_cast<double>(i) / render_rate_hz;
    const double wall = tau + delay;
    while (next_arrival < by_arrive.size() && by_arrive[next_arrival]->t_arrive <= wall) {
      const ArrivedPacket* ap = by_arrive[next_arrival++];
      const auto pos = std::upper_bound(buffered.begin(), buffered.end(), ap,
                                        [](const ArrivedPacket* a, const ArrivedPacket* b) {
                                          return a->packet.t_send < b->packet.t_send;
                                        });
      buffered.insert(pos, ap);
    }
    if (buffered.empty()) continue;  // nothing to show yet

    const auto right_it = std::upper_bound(buffered.begin(), buffered.end(), tau,
                                           [](double t, const ArrivedPacket* p) {
                                             return t < p->packet.t_send;
                                           });
    const ArrivedPacket* left = right_it == buffered.begin() ? nullptr : *(right_it - 1);
    const ArrivedPacket* right = right_it == buffered.end() ? nullptr : *right_it;

    Pose pose;
    if (left != nullptr && same_time(left->packet.t_send, tau)) {
      pose = packet_pose(left->packet).canonicalized();
    } else if (left != nullptr && right != nullptr) {
      const double a = (tau - left->packet.t_send) /
                       (right->packet.t_send - left->packet.t_send);
      pose = interpolate(engine, {packet_pose(left->packet), packet_pose(right->packet), a});
    } else if (left == nullptr) {
      // Playback time precedes everything buffered: clamp forward.
      pose = packet_pose(right->packet).canonicalized();
    } else if (last_rendered.has_value()) {
      pose = *last_rendered;  // newest data exhausted: hold
    } else {
      pose = packet_pose(left->packet).canonicalized();
    }
    last_rendered = pose;
    out.push_back({i, tau, pose});
  }
  return out;
}

SimReport score(const std::vector<RenderedFrame>& rendered, const Trajectory& truth) {
  if (rendered.empty()) throw Error("score: no rendered frames");
  double pos_sq = 0.0;
  double ang_sq = 0.0;
  for (const RenderedFrame& f : rendered) {
    const Pose gt = truth.sample(f.time);
    const double dp = distance(f.pose.t, gt.t);
    const double da = angle_between(f.pose.q, gt.q) * (180.0 / kPi);
    pos_sq += dp * dp;
    ang_sq += da * da;
  }
  double jitter = 0.0;
  for (std::size_t i = 1; i + 1 < rendered.size(); ++i) {
    const Vec3 dd = rendered[i + 1].pose.t - 2.0 * rendered[i].pose.t + rendered[i - 1].pose.t;
    jitter = std::max(jitter, dd.norm());
  }
  const auto n = static_cast<double>(rendered.size());
  SimReport rep;
  rep.pos_rmse = std::sqrt(pos_sq / n);
  rep.ang_rmse_deg = std::sqrt(ang_sq / n);
  rep.jitter = jitter;
  rep.frames_rendered = rendered.size();
  return rep;
}

SimReport score(const std::vector<RenderedFrame>& rendered, const Trajectory& truth,
                const ChannelConfig& cfg, EngineKind engine, int users) {
  SimReport rep = score(rendered, truth);
  rep.bytes_per_sec = bandwidth_bytes_per_sec(cfg, users);
  rep.engine = engine;
  return rep;
}

SimRun run_one(const Trajectory& traj, EngineKind engine, const ChannelConfig& cfg,
               double render_rate_hz, int users) {
  const auto sent = sample_keyframes(traj, cfg);
  const auto arrived = channel_pass(sent, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  auto frames = reconstruct(arrived, engine, render_rate_hz);
  const auto t1 = std::chrono::steady_clock::now();
  SimReport rep = score(frames, traj, cfg, engine, users);
  const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
  rep.per_frame_cost_ns = frames.empty() ? 0.0 : ns / static_cast<double>(frames.size());
  return {rep, std::move(frames)};
}

std::vector<MatrixRow> run_matrix(const std::vector<NamedTrajectory>& trajectories,
                                  const std::vector<EngineKind>& engines,
                                  const std::vector<double>& update_rates,
                                  const ChannelConfig& base, double render_rate_hz, int users) {
  std::vector<MatrixRow> rows;
  rows.reserve(trajectories.size() * engines.size() * update_rates.size());
  for (const NamedTrajectory& nt : trajectories) {
    for (double rate : update_rates) {
      ChannelConfig cfg = base;
      cfg.updates_per_sec = rate;
      // One arrival stream per cell so engines compete on identical
      // input.
      const auto arrived = channel_pass(sample_keyframes(nt.traj, cfg), cfg);
      for (EngineKind engine : engines) {
        const auto t0 = std::chrono::steady_clock::now();
        auto frames = reconstruct(arrived, engine, render_rate_hz);
        const auto t1 = std::chrono::steady_clock::now();
        SimReport rep = score(frames, nt.traj, cfg, engine, users);
        const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        rep.per_frame_cost_ns =
            frames.empty() ? 0.0 : ns / static_cast<double>(frames.size());
        rows.push_back({nt.name, engine, rate, rep});
      }
    }
  }
  return rows;
}

long bandwidth_reduction_percent(double rate_ours, double rate_soa) {
  return std::lround(100.0 * (1.0 - rate_ours / rate_soa));
}

}  // namespace gatween
