// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gatween/errors.hpp"

namespace gatween {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ScenarioError(std::string("unknown key \"") + item.key() + "\" in " + where);
    }
  }
}

const json& require_key(const json& obj, const char* key, const char* where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ScenarioError(std::string("missing key \"") + key + "\" in " + where);
  }
  return *it;
}

double as_number(const json& v, const char* key) {
  if (!v.is_number()) throw ScenarioError(std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

Pose parse_pose(const json& node, std::size_t idx) {
  const std::string where = "trajectory[" + std::to_string(idx) + "]";
  if (!node.is_object()) throw ScenarioError(where + " must be an object");
  reject_unknown_keys(node, {"time", "position", "orientation"}, where.c_str());
  const json& pos = require_key(node, "position", where.c_str());
  const json& ori = require_key(node, "orientation", where.c_str());
  if (!pos.is_array() || pos.size() != 3) {
    throw ScenarioError(where + ": key \"position\" must be an array of 3 numbers");
  }
  if (!ori.is_array() || ori.size() != 4) {
    throw ScenarioError(where + ": key \"orientation\" must be an array of 4 numbers (x, y, z, w)");
  }
  Pose p;
  p.t = {as_number(pos[0], "position"), as_number(pos[1], "position"),
         as_number(pos[2], "position")};
  p.q = {as_number(ori[0], "orientation"), as_number(ori[1], "orientation"),
         as_number(ori[2], "orientation"), as_number(ori[3], "orientation")};
  if (!p.q.is_unit()) {
    throw ScenarioError(where + ": key \"orientation\" is not a unit quaternion (within 1e-6)");
  }
  return p;
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("scenario root must be an object");
  reject_unknown_keys(doc,
                      {"trajectory", "engines", "updates_per_sec", "render_rate_hz", "channel",
                       "seed", "users"},
                      "scenario");

  const json& jtraj = require_key(doc, "trajectory", "scenario");
  if (!jtraj.is_array() || jtraj.empty()) {
    throw ScenarioError("key \"trajectory\" must be a nonempty array of control poses");
  }
  std::vector<double> times;
  std::vector<Pose> poses;
  times.reserve(jtraj.size());
  poses.reserve(jtraj.size());
  for (std::size_t i = 0; i < jtraj.size(); ++i) {
    const json& node = jtraj[i];
    times.push_back(as_number(require_key(node, "time", "trajectory entry"), "time"));
    poses.push_back(parse_pose(node, i));
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw ScenarioError("key \"trajectory\": times must strictly increase");
    }
  }

  const json& jeng = require_key(doc, "engines", "scenario");
  if (!jeng.is_array() || jeng.empty()) {
    throw ScenarioError("key \"engines\" must be a nonempty array of engine names");
  }
  std::vector<EngineKind> engines;
  for (const json& e : jeng) {
    if (!e.is_string()) throw ScenarioError("key \"engines\" entries must be strings");
    const auto kind = engine_from_name(e.get<std::string>());
    if (!kind) {
      throw ScenarioError("key \"engines\": unknown engine \"" + e.get<std::string>() + "\"");
    }
    engines.push_back(*kind);
  }

  const json& jrates = require_key(doc, "updates_per_sec", "scenario");
  if (!jrates.is_array() || jrates.empty()) {
    throw ScenarioError("key \"updates_per_sec\" must be a nonempty array of rates");
  }
  std::vector<double> rates;
  for (const json& r : jrates) {
    const double rate = as_number(r, "updates_per_sec");
    if (!(rate > 0.0)) throw ScenarioError("key \"updates_per_sec\": rates must be positive");
    rates.push_back(rate);
  }

  const double render = as_number(require_key(doc, "render_rate_hz", "scenario"), "render_rate_hz");
  if (!(render > 0.0)) throw ScenarioError("key \"render_rate_hz\" must be positive");

  ChannelConfig channel;
  if (const auto it = doc.find("channel"); it != doc.end()) {
    const json& jch = *it;
    if (!jch.is_object()) throw ScenarioError("key \"channel\" must be an object");
    reject_unknown_keys(jch, {"latency_s", "drop_prob", "float_width_bytes"}, "channel");
    if (const auto f = jch.find("latency_s"); f != jch.end()) {
      channel.latency_s = as_number(*f, "latency_s");
      if (channel.latency_s < 0.0) throw ScenarioError("key \"latency_s\" must be nonnegative");
    }
    if (const auto f = jch.find("drop_prob"); f != jch.end()) {
      channel.drop_prob = as_number(*f, "drop_prob");
      if (channel.drop_prob < 0.0 || channel.drop_prob > 1.0) {
        throw ScenarioError("key \"drop_prob\" must be within [0, 1]");
      }
    }
    if (const auto f = jch.find("float_width_bytes"); f != jch.end()) {
      const double w = as_number(*f, "float_width_bytes");
      if (w != 8.0 && w != 4.0) throw ScenarioError("key \"float_width_bytes\" must be 8 or 4");
      channel.float_width_bytes = static_cast<int>(w);
    }
  }

  if (const auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) {
      throw ScenarioError("key \"seed\" must be an unsigned integer");
    }
    channel.seed = it->get<std::uint64_t>();
  }

  int users = 1;
  if (const auto it = doc.find("users"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) {
      throw ScenarioError("key \"users\" must be a positive integer");
    }
    users = static_cast<int>(it->get<long long>());
  }

  return {Trajectory(std::move(times), std::move(poses)), std::move(engines), std::move(rates),
          render, channel, users};
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace gatween
