// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/trace.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "gatween/errors.hpp"

namespace gatween {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_real(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string format_trace(const std::vector<RenderedFrame>& frames, EngineKind engine,
                         const Trajectory& truth) {
  std::string out =
      "frame_index,time_s,engine,px,py,pz,qx,qy,qz,qw,err_pos_m,err_ang_deg\n";
  const std::string name(engine_name(engine));
  for (const RenderedFrame& f : frames) {
    const Pose gt = truth.sample(f.time);
    const Quaternion q = f.pose.q.canonicalized();
    out += std::to_string(f.index);
    out += ',';
    append_real(out, f.time);
    out += ',';
    out += name;
    const double vals[] = {f.pose.t.x,
                           f.pose.t.y,
                           f.pose.t.z,
                           q.x,
                           q.y,
                           q.z,
                           q.w,
                           distance(f.pose.t, gt.t),
                           angle_between(f.pose.q, gt.q) * (180.0 / kPi)};
    for (double v : vals) {
      out += ',';
      append_real(out, v);
    }
    out += '\n';
  }
  return out;
}

void write_trace_file(const std::string& path, const std::string& trace_text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open trace file for writing: " + path);
  out.write(trace_text.data(), static_cast<std::streamsize>(trace_text.size()));
  if (!out) throw Error("failed writing trace file: " + path);
}

double trace_pos_rmse(const std::string& trace_text) {
  double sq = 0.0;
  std::size_t n = 0;
  std::size_t pos = trace_text.find('\n');  // skip header
  if (pos == std::string::npos) throw Error("trace has no data rows");
  ++pos;
  while (pos < trace_text.size()) {
    std::size_t eol = trace_text.find('\n', pos);
    if (eol == std::string::npos) eol = trace_text.size();
    // err_pos_m is the second-to-last column.
    const std::size_t last_comma = trace_text.rfind(',', eol);
    if (last_comma == std::string::npos || last_comma < pos) {
      throw Error("trace row has too few columns");
    }
    const std::size_t prev_comma = trace_text.rfind(',', last_comma - 1);
    if (prev_comma == std::string::npos || prev_comma < pos) {
      throw Error("trace row has too few columns");
    }
    double v = 0.0;
    const char* first = trace_text.data() + prev_comma + 1;
    const char* last = trace_text.data() + last_comma;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw Error("trace err_pos_m column unreadable");
    sq += v * v;
    ++n;
    pos = eol + 1;
  }
  if (n == 0) throw Error("trace has no data rows");
  return std::sqrt(sq / static_cast<double>(n));
}

}  // namespace gatween
