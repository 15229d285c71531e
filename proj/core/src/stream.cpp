// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/stream.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "gatween/errors.hpp"

namespace gatween {

namespace {

// Uniform double in [0, 1) from the top 53 bits of the generator
// word. Spelled out because std::uniform_real_distribution is free
// to vary across standard libraries and would break cross-build
// determinism.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void append_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_f64_le(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

void append_f32_le(std::vector<std::uint8_t>& out, float v) {
  const auto bits = std::bit_cast<std::uint32_t>(v);
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

}  // namespace

KeyframePacket make_packet(std::uint32_t seq, double t_send, const Pose& p) {
  return {seq, t_send, {p.t.x, p.t.y, p.t.z, p.q.x, p.q.y, p.q.z, p.q.w}};
}

Pose packet_pose(const KeyframePacket& pkt) {
  return {{pkt.payload[0], pkt.payload[1], pkt.payload[2]},
          {pkt.payload[3], pkt.payload[4], pkt.payload[5], pkt.payload[6]}};
}

double bandwidth_bytes_per_sec(const ChannelConfig& cfg, int users) {
  return cfg.updates_per_sec * 7.0 * static_cast<double>(cfg.float_width_bytes) *
         static_cast<double>(users);
}

std::vector<KeyframePacket> sample_keyframes(const Trajectory& traj, const ChannelConfig& cfg) {
  if (!(cfg.updates_per_sec > 0.0)) throw Error("sample_keyframes: updates_per_sec must be positive");
  const double t0 = traj.start_time();
  const double t1 = traj.end_time();
  const double dt = 1.0 / cfg.updates_per_sec;
  const auto steps = static_cast<std::size_t>(std::floor((t1 - t0) * cfg.updates_per_sec + 1e-9));

  std::vector<KeyframePacket> out;
  out.reserve(steps + 2);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = t0 + static_cast<double>(i) * dt;
    out.push_back(make_packet(static_cast<std::uint32_t>(i), t, traj.sample(t)));
  }
  // Close the stream on the exact final pose when the grid misses it.
  if (out.back().t_send < t1 - 1e-9) {
    out.push_back(make_packet(static_cast<std::uint32_t>(out.size()), t1, traj.sample(t1)));
  }
  return out;
}

std::vector<ArrivedPacket> channel_pass(const std::vector<KeyframePacket>& stream,
                                        const ChannelConfig& cfg) {
  if (cfg.float_width_bytes != 8 && cfg.float_width_bytes != 4) {
    throw Error("channel_pass: float_width_bytes must be 8 or 4");
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<ArrivedPacket> out;
  out.reserve(stream.size());
  for (const KeyframePacket& pkt : stream) {
    const double u = next_uniform(rng);
    if (u < cfg.drop_prob) continue;
    ArrivedPacket ap{pkt.t_send + cfg.latency_s, pkt};
    if (cfg.float_width_bytes == 4) {
      for (double& v : ap.packet.payload) v = static_cast<double>(static_cast<float>(v));
    }
    out.push_back(ap);
  }
  return out;
}

std::size_t packet_wire_size(int float_width_bytes) {
  return 4 + 8 + 7 * static_cast<std::size_t>(float_width_bytes);
}

void append_packet_bytes(std::vector<std::uint8_t>& out, const KeyframePacket& pkt,
                         int float_width_bytes) {
  append_u32_le(out, pkt.seq);
  append_f64_le(out, pkt.t_send);
  for (double v : pkt.payload) {
    if (float_width_bytes == 4) {
      append_f32_le(out, static_cast<float>(v));
    } else {
      append_f64_le(out, v);
    }
  }
}

}  // namespace gatween
