// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gatween/pose.hpp"
#include "gatween/trajectory.hpp"

namespace gatween {

// One transmitted displacement sample. The payload carries exactly
// seven reals: translation, then quaternion (x, y, z, w).
struct KeyframePacket {
  std::uint32_t seq = 0;
  double t_send = 0.0;
  std::array<double, 7> payload{};
};

struct ChannelConfig {
  double updates_per_sec = 20.0;
  int float_width_bytes = 8;  // 8 or 4
  double latency_s = 0.0;
  double drop_prob = 0.0;
  std::uint64_t seed = 0;
};

struct ArrivedPacket {
  double t_arrive = 0.0;
  KeyframePacket packet;
};

KeyframePacket make_packet(std::uint32_t seq, double t_send, const Pose& p);
Pose packet_pose(const KeyframePacket& pkt);

// Payload bytes per second for one stream, times the user count.
// Exactly updates_per_sec * 7 * float_width_bytes * users.
double bandwidth_bytes_per_sec(const ChannelConfig& cfg, int users);

// Samples ground truth at uniform spacing 1/updates_per_sec over the
// whole trajectory, both endpoints included. An integral number of
// intervals yields rate * duration + 1 packets.
std::vector<KeyframePacket> sample_keyframes(const Trajectory& traj, const ChannelConfig& cfg);

// Applies the channel: every packet is delayed by latency_s and
// dropped i.i.d. with drop_prob under a generator seeded from
// cfg.seed. Packets are consumed in order, one random draw each, so
// the surviving set is a pure function of the seed. A 4-byte float
// width rounds each payload value through single precision.
std::vector<ArrivedPacket> channel_pass(const std::vector<KeyframePacket>& stream,
                                        const ChannelConfig& cfg);

// Wire image: little-endian u32 seq, f64 t_send, then 7 payload reals
// at the configured width. No padding.
std::size_t packet_wire_size(int float_width_bytes);
void append_packet_bytes(std::vector<std::uint8_t>& out, const KeyframePacket& pkt,
                         int float_width_bytes);

}  // namespace gatween
