// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gatween/errors.hpp"
#include "gatween/sampling.hpp"
#include "gatween/simulate.hpp"
#include "gatween/stream.hpp"
#include "gatween/trace.hpp"
#include "gatween/trajectory.hpp"

using namespace gatween;

namespace {

constexpr double kPi = 3.14159265358979323846;

Trajectory screw_trajectory() {
  return Trajectory({0.0, 2.0},
                    {Pose::identity(),
                     {{0.4, -0.3, 0.9}, Quaternion::from_axis_angle({1, 1, 0}, 2.0 * kPi / 3.0)}});
}

Trajectory bent_trajectory() {
  return Trajectory(
      {0.0, 1.0, 2.0, 3.0},
      {Pose::identity(),
       {{0.5, 0.1, -0.2}, Quaternion::from_axis_angle({0, 0, 1}, 0.7)},
       {{0.3, 0.6, 0.4}, Quaternion::from_axis_angle({1, 0, 0}, 1.4)},
       {{-0.2, 0.5, 0.1}, Quaternion::from_axis_angle({0, 1, 0}, -1.1)}});
}

// Straightforward re-implementation of the documented buffering rule,
// structured differently from the library (full rescan per tick).
std::vector<RenderedFrame> reference_reconstruct(const std::vector<ArrivedPacket>& arrivals,
                                                 EngineKind engine, double render_rate) {
  double interval = 0.0;
  double offset = 1e300;
  std::vector<double> sends;
  for (const ArrivedPacket& ap : arrivals) {
    sends.push_back(ap.packet.t_send);
    offset = std::min(offset, ap.t_arrive - ap.packet.t_send);
  }
  std::sort(sends.begin(), sends.end());
  for (std::size_t i = 1; i < sends.size(); ++i) {
    const double d = sends[i] - sends[i - 1];
    if (d > 0.0 && (interval == 0.0 || d < interval)) interval = d;
  }
  const double s0 = sends.front();
  const double s1 = sends.back();
  const double delay = interval + offset;  // same rounding as the library
  const auto ticks = static_cast<std::size_t>(std::floor((s1 - s0) * render_rate + 1e-9));

  std::vector<RenderedFrame> out;
  std::optional<Pose> last;
  for (std::size_t i = 0; i <= ticks; ++i) {
    const double tau = s0 + static_cast<double>(i) / render_rate;
    const double wall = tau + delay;
    const ArrivedPacket* left = nullptr;
    const ArrivedPacket* right = nullptr;
    bool any = false;
    for (const ArrivedPacket& ap : arrivals) {
      if (ap.t_arrive > wall) continue;
      any = true;
      const double t = ap.packet.t_send;
      if (t <= tau && (left == nullptr || t > left->packet.t_send)) left = &ap;
      if (t > tau && (right == nullptr || t < right->packet.t_send)) right = &ap;
    }
    if (!any) continue;
    Pose pose;
    if (left != nullptr && std::abs(left->packet.t_send - tau) <= 1e-12 * std::max(1.0, std::abs(tau))) {
      pose = packet_pose(left->packet).canonicalized();
    } else if (left != nullptr && right != nullptr) {
      const double a =
          (tau - left->packet.t_send) / (right->packet.t_send - left->packet.t_send);
      pose = interpolate(engine, {packet_pose(left->packet), packet_pose(right->packet), a});
    } else if (left == nullptr) {
      pose = packet_pose(right->packet).canonicalized();
    } else if (last.has_value()) {
      pose = *last;
    } else {
      pose = packet_pose(left->packet).canonicalized();
    }
    last = pose;
    out.push_back({i, tau, pose});
  }
  return out;
}

}  // namespace

TEST_CASE("trajectory validates its inputs and clamps queries") {
  CHECK_THROWS_AS(Trajectory({}, {}), Error);
  CHECK_THROWS_AS(Trajectory({0.0, 0.0}, {Pose::identity(), Pose::identity()}), Error);
  CHECK_THROWS_AS(Trajectory({0.0}, {Pose::identity(), Pose::identity()}), Error);

  const Trajectory traj = screw_trajectory();
  CHECK(pose_deviation(traj.sample(-1.0), traj.sample(0.0)) == 0.0);
  CHECK(pose_deviation(traj.sample(5.0), traj.sample(2.0)) == 0.0);
  CHECK(pose_deviation(traj.sample(0.0), traj.poses()[0].canonicalized()) <= 1e-12);
  CHECK(pose_deviation(traj.sample(2.0), traj.poses()[1].canonicalized()) <= 1e-12);
}

TEST_CASE("keyframe sampling hits both endpoints") {
  const Trajectory traj({0.0, 1.0}, {Pose::identity(), Pose{{1, 0, 0}, Quaternion::identity()}});
  ChannelConfig cfg;
  cfg.updates_per_sec = 20.0;
  const auto packets = sample_keyframes(traj, cfg);
  REQUIRE(packets.size() == 21);
  CHECK(packets.front().t_send == 0.0);
  CHECK(packets.back().t_send == 1.0);
  for (std::size_t i = 0; i < packets.size(); ++i) {
    CHECK(packets[i].seq == i);
    const Pose truth = traj.sample(packets[i].t_send);
    CHECK(pose_deviation(packet_pose(packets[i]).canonicalized(), truth) <= 1e-12);
  }

  // Non-integral products still close on the exact endpoint.
  cfg.updates_per_sec = 2.5;
  const auto coarse = sample_keyframes(traj, cfg);
  REQUIRE(coarse.size() == 4);  // 0, 0.4, 0.8, then the endpoint
  CHECK(coarse.back().t_send == 1.0);
}

TEST_CASE("static trajectory produces identical payloads") {
  const Pose p{{0.25, -0.1, 1.4}, Quaternion::from_axis_angle({0, 0, 1}, 0.7)};
  const Trajectory traj({0.0, 1.0}, {p, p});
  ChannelConfig cfg;
  const auto packets = sample_keyframes(traj, cfg);
  for (const KeyframePacket& pkt : packets) {
    CHECK(pose_deviation(packet_pose(pkt).canonicalized(), p.canonicalized()) <= 1e-12);
  }
}

TEST_CASE("bandwidth accounting is exact") {
  ChannelConfig at20;
  at20.updates_per_sec = 20.0;
  ChannelConfig at30;
  at30.updates_per_sec = 30.0;
  for (int users : {1, 2, 10}) {
    CHECK(bandwidth_bytes_per_sec(at20, users) == 1120.0 * users);
    CHECK(bandwidth_bytes_per_sec(at30, users) == 1680.0 * users);
  }
  ChannelConfig narrow = at20;
  narrow.float_width_bytes = 4;
  CHECK(bandwidth_bytes_per_sec(narrow, 1) == 560.0);
}

TEST_CASE("channel is identity when lossless and immediate") {
  const auto packets = sample_keyframes(screw_trajectory(), ChannelConfig{});
  const auto arrived = channel_pass(packets, ChannelConfig{});
  REQUIRE(arrived.size() == packets.size());
  for (std::size_t i = 0; i < packets.size(); ++i) {
    CHECK(arrived[i].t_arrive == packets[i].t_send);
    CHECK(arrived[i].packet.seq == packets[i].seq);
    CHECK(arrived[i].packet.payload == packets[i].payload);
  }
}

TEST_CASE("channel drops everything at probability one") {
  ChannelConfig cfg;
  cfg.drop_prob = 1.0;
  const auto arrived = channel_pass(sample_keyframes(screw_trajectory(), cfg), cfg);
  CHECK(arrived.empty());
}

TEST_CASE("channel is deterministic and order preserving") {
  ChannelConfig cfg;
  cfg.updates_per_sec = 500.0;  // ~1000 packets over 2 s
  cfg.drop_prob = 0.5;
  cfg.latency_s = 0.035;
  cfg.seed = 424242;
  const auto packets = sample_keyframes(screw_trajectory(), cfg);
  REQUIRE(packets.size() == 1001);
  const auto a = channel_pass(packets, cfg);
  const auto b = channel_pass(packets, cfg);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() > 300);
  CHECK(a.size() < 700);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].packet.seq == b[i].packet.seq);
    CHECK(a[i].t_arrive == b[i].t_arrive);
    CHECK(a[i].t_arrive == a[i].packet.t_send + 0.035);
    if (i > 0) CHECK(a[i].packet.seq > a[i - 1].packet.seq);
  }

  ChannelConfig other = cfg;
  other.seed = 424243;
  const auto c = channel_pass(packets, other);
  bool identical = c.size() == a.size();
  if (identical) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (c[i].packet.seq != a[i].packet.seq) identical = false;
    }
  }
  CHECK(!identical);
}

TEST_CASE("four-byte width quantizes payloads through single precision") {
  ChannelConfig cfg;
  cfg.float_width_bytes = 4;
  const auto packets = sample_keyframes(screw_trajectory(), cfg);
  const auto arrived = channel_pass(packets, cfg);
  REQUIRE(arrived.size() == packets.size());
  for (std::size_t i = 0; i < packets.size(); ++i) {
    for (int k = 0; k < 7; ++k) {
      CHECK(arrived[i].packet.payload[k] ==
            static_cast<double>(static_cast<float>(packets[i].payload[k])));
    }
  }
}

TEST_CASE("packet wire image is little endian with no padding") {
  CHECK(packet_wire_size(8) == 68);
  CHECK(packet_wire_size(4) == 40);

  KeyframePacket pkt;
  pkt.seq = 0x01020304u;
  pkt.t_send = 0.5;
  pkt.payload = {1.0, -2.0, 3.0, 0.0, 0.25, -0.25, 1.0};

  std::vector<std::uint8_t> bytes;
  append_packet_bytes(bytes, pkt, 8);
  REQUIRE(bytes.size() == 68);
  CHECK(bytes[0] == 0x04);
  CHECK(bytes[1] == 0x03);
  CHECK(bytes[2] == 0x02);
  CHECK(bytes[3] == 0x01);
  std::uint64_t tbits = 0;
  for (int i = 0; i < 8; ++i) tbits |= static_cast<std::uint64_t>(bytes[4 + i]) << (8 * i);
  CHECK(std::bit_cast<double>(tbits) == 0.5);
  for (int k = 0; k < 7; ++k) {
    std::uint64_t vbits = 0;
    for (int i = 0; i < 8; ++i) {
      vbits |= static_cast<std::uint64_t>(bytes[12 + 8 * k + i]) << (8 * i);
    }
    CHECK(std::bit_cast<double>(vbits) == pkt.payload[k]);
  }

  bytes.clear();
  append_packet_bytes(bytes, pkt, 4);
  REQUIRE(bytes.size() == 40);
  for (int k = 0; k < 7; ++k) {
    std::uint32_t vbits = 0;
    for (int i = 0; i < 4; ++i) {
      vbits |= static_cast<std::uint32_t>(bytes[12 + 4 * k + i]) << (8 * i);
    }
    CHECK(std::bit_cast<float>(vbits) == static_cast<float>(pkt.payload[k]));
  }
}

TEST_CASE("reconstruct rejects an empty stream") {
  CHECK_THROWS_AS(reconstruct({}, EngineKind::Baseline, 60.0), NoKeyframes);
}

TEST_CASE("lossless reconstruction at the update rate returns the payloads") {
  const Trajectory traj = screw_trajectory();
  ChannelConfig cfg;
  cfg.updates_per_sec = 20.0;
  const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
  for (EngineKind kind : kAllEngines) {
    const auto frames = reconstruct(arrived, kind, 20.0);
    REQUIRE(frames.size() == 41);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      CHECK(pose_deviation(frames[i].pose, packet_pose(arrived[i].packet).canonicalized()) <=
            1e-9);
    }
  }
}

TEST_CASE("a midpoint tick delegates to the engine at a half") {
  const Pose p0 = Pose::identity();
  const Pose p1{{1, 2, 3}, Quaternion::from_axis_angle({0, 1, 0}, 1.0)};
  std::vector<ArrivedPacket> arrivals = {{0.0, make_packet(0, 0.0, p0)},
                                         {1.0, make_packet(1, 1.0, p1)}};
  for (EngineKind kind : kAllEngines) {
    const auto frames = reconstruct(arrivals, kind, 2.0);
    REQUIRE(frames.size() == 3);
    CHECK(frames[1].time == 0.5);
    CHECK(pose_deviation(frames[1].pose, interpolate(kind, {p0, p1, 0.5})) <= 1e-12);
  }
}

TEST_CASE("screw engines reconstruct a constant screw exactly") {
  const Trajectory traj = screw_trajectory();
  ChannelConfig cfg;
  cfg.updates_per_sec = 20.0;
  const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
  for (EngineKind kind : {EngineKind::DualQuat, EngineKind::MotorSlerp}) {
    const auto frames = reconstruct(arrived, kind, 60.0);
    const SimReport rep = score(frames, traj);
    CHECK(rep.pos_rmse <= 1e-9);
    CHECK(rep.ang_rmse_deg <= 1e-7);
  }
}

TEST_CASE("library reconstruction matches the reference implementation") {
  const Trajectory traj = bent_trajectory();
  std::vector<ChannelConfig> cases;
  {
    ChannelConfig c;
    c.updates_per_sec = 15.0;
    cases.push_back(c);
    c.drop_prob = 0.4;
    c.seed = 9001;
    cases.push_back(c);
    c.latency_s = 0.08;
    cases.push_back(c);
    c.updates_per_sec = 7.5;
    c.drop_prob = 0.25;
    cases.push_back(c);
  }
  for (const ChannelConfig& cfg : cases) {
    const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
    for (EngineKind kind : {EngineKind::Baseline, EngineKind::DualQuat,
                            EngineKind::MotorLerpPGA}) {
      const auto got = reconstruct(arrived, kind, 48.0);
      const auto want = reference_reconstruct(arrived, kind, 48.0);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].index == want[i].index);
        CHECK(got[i].time == want[i].time);
        CHECK(pose_deviation(got[i].pose, want[i].pose) == 0.0);
      }
    }
  }
}

TEST_CASE("lossy reconstruction holds rather than extrapolates") {
  // Constant screw ground truth: every legitimately interpolated pose
  // lies on the screw. A held pose repeats an earlier output, so
  // consecutive repeats are the only non-screw artifact allowed.
  const Trajectory traj = screw_trajectory();
  ChannelConfig cfg;
  cfg.updates_per_sec = 10.0;
  cfg.drop_prob = 0.35;
  cfg.seed = 5150;
  const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
  const auto frames = reconstruct(arrived, EngineKind::DualQuat, 30.0);
  REQUIRE(!frames.empty());
  std::size_t held = 0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    // Distance from the screw path, minimized over the source time.
    double best = 1e300;
    for (int k = 0; k <= 400; ++k) {
      const Pose gt = traj.sample(2.0 * k / 400.0);
      best = std::min(best, distance(frames[i].pose.t, gt.t));
    }
    const bool on_path = best <= 3e-3;  // dense-grid resolution
    const bool repeats = i > 0 && pose_deviation(frames[i].pose, frames[i - 1].pose) == 0.0;
    CHECK((on_path || repeats));
    if (repeats) ++held;
  }
  CHECK(held > 0);  // the drop pattern actually exercised the hold path
}

TEST_CASE("score is zero on perfect playback and flags jitter") {
  const Trajectory traj = screw_trajectory();
  std::vector<RenderedFrame> frames;
  for (int i = 0; i <= 100; ++i) {
    const double t = 2.0 * i / 100.0;
    frames.push_back({static_cast<std::size_t>(i), t, traj.sample(t)});
  }
  const SimReport rep = score(frames, traj);
  CHECK(rep.pos_rmse <= 1e-12);
  CHECK(rep.ang_rmse_deg <= 1e-10);
  CHECK(rep.frames_rendered == 101);

  // A static stream has zero second difference.
  std::vector<RenderedFrame> still(10, RenderedFrame{0, 0.0, Pose::identity()});
  for (std::size_t i = 0; i < still.size(); ++i) {
    still[i].index = i;
    still[i].time = 0.1 * static_cast<double>(i);
  }
  const Trajectory flat({0.0, 1.0}, {Pose::identity(), Pose::identity()});
  CHECK(score(still, flat).jitter == 0.0);

  // One displaced sample bumps the second difference.
  still[5].pose.t.x = 0.01;
  CHECK(score(still, flat).jitter == doctest::Approx(0.02).epsilon(1e-12));

  CHECK_THROWS_AS(score({}, flat), Error);
}

TEST_CASE("screw engines beat the baseline at low rates on a screw path") {
  const Trajectory traj = screw_trajectory();
  ChannelConfig cfg;
  cfg.updates_per_sec = 5.0;
  const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
  const double base = score(reconstruct(arrived, EngineKind::Baseline, 60.0), traj).pos_rmse;
  const double dq = score(reconstruct(arrived, EngineKind::DualQuat, 60.0), traj).pos_rmse;
  CHECK(dq <= base);
  CHECK(base > 1e-6);  // the baseline genuinely errs here
}

TEST_CASE("pos_rmse is nonincreasing in the update rate") {
  for (const Trajectory& traj : {screw_trajectory(), bent_trajectory()}) {
    for (EngineKind kind : kAllEngines) {
      double prev = 1e300;
      for (double rate : {5.0, 10.0, 15.0, 20.0, 30.0}) {
        ChannelConfig cfg;
        cfg.updates_per_sec = rate;
        const auto arrived = channel_pass(sample_keyframes(traj, cfg), cfg);
        const double rmse = score(reconstruct(arrived, kind, 60.0), traj).pos_rmse;
        CHECK(rmse <= prev + 1e-12);
        prev = rmse;
      }
    }
  }
}

TEST_CASE("run_matrix sweeps the full cartesian grid deterministically") {
  const std::vector<NamedTrajectory> trajs = {{"screw", screw_trajectory()},
                                              {"bent", bent_trajectory()}};
  const std::vector<EngineKind> engines = {EngineKind::Baseline, EngineKind::DualQuat};
  const std::vector<double> rates = {10.0, 20.0};
  ChannelConfig base;
  base.drop_prob = 0.1;
  base.seed = 77;

  const auto rows = run_matrix(trajs, engines, rates, base, 60.0, 2);
  REQUIRE(rows.size() == 8);
  const auto again = run_matrix(trajs, engines, rates, base, 60.0, 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].trajectory == again[i].trajectory);
    CHECK(rows[i].engine == again[i].engine);
    CHECK(rows[i].report.pos_rmse == again[i].report.pos_rmse);
    CHECK(rows[i].report.ang_rmse_deg == again[i].report.ang_rmse_deg);
    CHECK(rows[i].report.jitter == again[i].report.jitter);
    CHECK(rows[i].report.frames_rendered == again[i].report.frames_rendered);
    // Bandwidth column obeys the accounting identity exactly.
    CHECK(rows[i].report.bytes_per_sec == rows[i].updates_per_sec * 7.0 * 8.0 * 2.0);
  }
}

TEST_CASE("a written trace re-scores to the same position error") {
  const Trajectory traj = bent_trajectory();
  ChannelConfig cfg;
  cfg.updates_per_sec = 10.0;
  cfg.drop_prob = 0.2;
  cfg.latency_s = 0.03;
  cfg.seed = 31337;
  const SimRun run = run_one(traj, EngineKind::MotorSlerp, cfg, 48.0, 1);
  const std::string text = format_trace(run.frames, EngineKind::MotorSlerp, traj);

  CHECK(text.substr(0, text.find('\n')) ==
        "frame_index,time_s,engine,px,py,pz,qx,qy,qz,qw,err_pos_m,err_ang_deg");
  CHECK(format_trace(run.frames, EngineKind::MotorSlerp, traj) == text);
  CHECK(std::abs(trace_pos_rmse(text) - run.report.pos_rmse) <=
        1e-12 * std::max(1.0, run.report.pos_rmse));
}

TEST_CASE("bandwidth reduction percentages") {
  CHECK(bandwidth_reduction_percent(20, 30) == 33);
  CHECK(bandwidth_reduction_percent(10, 20) == 50);
  CHECK(bandwidth_reduction_percent(7, 15) == 53);
  CHECK(bandwidth_reduction_percent(5, 12) == 58);
  CHECK(bandwidth_reduction_percent(20, 20) == 0);
}
