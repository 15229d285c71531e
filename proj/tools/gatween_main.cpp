// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gatween/errors.hpp"
#include "gatween/perf.hpp"
#include "gatween/scenario.hpp"
#include "gatween/selftest.hpp"
#include "gatween/simulate.hpp"
#include "gatween/trace.hpp"

namespace {

using namespace gatween;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// out/run.csv -> out/run.motor_slerp.20ups.csv
std::string trace_path_for(const std::string& base, EngineKind engine, double rate) {
  const std::size_t slash = base.find_last_of('/');
  const std::size_t dot = base.find_last_of('.');
  const std::string tag = "." + std::string(engine_name(engine)) + "." + trim_number(rate) + "ups";
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return base + tag;
  }
  return base.substr(0, dot) + tag + base.substr(dot);
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 const std::string& packets_path, std::optional<std::uint64_t> seed,
                 const std::string& filter) {
  ScenarioConfig cfg = load_scenario_file(scenario_path);
  if (seed) cfg.channel.seed = *seed;

  std::vector<EngineKind> engines;
  for (EngineKind kind : cfg.engines) {
    if (filter.empty() || std::string(engine_name(kind)).find(filter) != std::string::npos) {
      engines.push_back(kind);
    }
  }
  if (engines.empty()) {
    std::cerr << "simulate: engine filter \"" << filter << "\" matched nothing\n";
    return 1;
  }

  if (!packets_path.empty()) {
    std::vector<std::uint8_t> bytes;
    for (double rate : cfg.update_rates) {
      ChannelConfig ch = cfg.channel;
      ch.updates_per_sec = rate;
      for (const KeyframePacket& pkt : sample_keyframes(cfg.trajectory, ch)) {
        append_packet_bytes(bytes, pkt, ch.float_width_bytes);
      }
    }
    std::ofstream out(packets_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open packet dump file: " + packets_path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }

  std::cout << "engine          updates/s  bytes/s    pos_rmse_m    ang_rmse_deg  jitter_m      "
               "frames  ns/frame\n";
  for (double rate : cfg.update_rates) {
    ChannelConfig ch = cfg.channel;
    ch.updates_per_sec = rate;
    for (EngineKind engine : engines) {
      const SimRun run = run_one(cfg.trajectory, engine, ch, cfg.render_rate_hz, cfg.users);
      const SimReport& r = run.report;
      std::cout << std::left << std::setw(16) << engine_name(engine) << std::setw(11)
                << trim_number(rate) << std::setw(11) << trim_number(r.bytes_per_sec)
                << std::scientific << std::setprecision(3) << std::setw(14) << r.pos_rmse
                << std::setw(14) << r.ang_rmse_deg << std::setw(14) << r.jitter
                << std::defaultfloat << std::setw(8) << r.frames_rendered << std::fixed
                << std::setprecision(1) << r.per_frame_cost_ns << std::defaultfloat << "\n";
      if (!out_path.empty()) {
        const std::string text = format_trace(run.frames, engine, cfg.trajectory);
        const std::string path = (engines.size() == 1 && cfg.update_rates.size() == 1)
                                     ? out_path
                                     : trace_path_for(out_path, engine, rate);
        write_trace_file(path, text);
        std::cout << "  trace -> " << path << "\n";
      }
    }
  }
  return 0;
}

int cmd_table1(std::optional<std::uint64_t> seed, const std::string& out_path,
               const std::string& filter, std::size_t calls) {
  struct Row {
    const char* quality;
    double soa;
    double ours;
  };
  const Row rows[] = {{"Excellent", 30, 20}, {"Good", 20, 10}, {"Mediocre", 15, 7},
                      {"Poor", 12, 5}};

  const auto timings = run_engine_bench(calls, seed.value_or(20260816));
  const double ratio = dq_vs_baseline_ratio(timings);

  std::ostringstream os;
  os << "network quality  soa_rate  ours_rate  soa_bytes/s  ours_bytes/s  bandwidth reduction\n";
  for (const Row& row : rows) {
    if (!filter.empty() && std::string(row.quality).find(filter) == std::string::npos) continue;
    ChannelConfig soa_cfg{row.soa, 8, 0.0, 0.0, 0};
    ChannelConfig ours_cfg{row.ours, 8, 0.0, 0.0, 0};
    os << std::left << std::setw(17) << row.quality << std::setw(10) << trim_number(row.soa)
       << std::setw(11) << trim_number(row.ours) << std::setw(13)
       << trim_number(bandwidth_bytes_per_sec(soa_cfg, 1)) << std::setw(14)
       << trim_number(bandwidth_bytes_per_sec(ours_cfg, 1)) << trim_number(row.soa) << " vs "
       << trim_number(row.ours) << " -> " << bandwidth_reduction_percent(row.ours, row.soa)
       << "%\n";
  }
  os << "per-frame cost ratio (dualquat / baseline): " << std::fixed << std::setprecision(3)
     << ratio << " over " << calls << " calls\n";

  std::cout << os.str();
  if (!out_path.empty()) write_text_file(out_path, os.str());
  return 0;
}

int cmd_selftest(std::optional<std::uint64_t> seed, const std::string& out_path,
                 const std::string& filter, bool inject_fault) {
  SelftestOptions opt;
  if (seed) opt.seed = *seed;
  opt.filter = filter;
  opt.inject_fault = inject_fault;

  const auto results = run_selftests(opt);
  std::ostringstream os;
  bool failed = false;
  for (const SuiteResult& r : results) {
    os << std::left << std::setw(16) << r.name << r.cases - r.failures << "/" << r.cases
       << " passed\n";
    if (r.failures > 0) {
      failed = true;
      os << "  FIRST FAILURE " << r.first_failure << "\n";
    }
  }
  if (results.empty()) {
    os << "selftest: filter \"" << filter << "\" matched no suites\n";
    failed = true;
  }
  std::cout << os.str();
  if (!out_path.empty()) write_text_file(out_path, os.str());
  return failed ? 1 : 0;
}

int cmd_bench(std::optional<std::uint64_t> seed, const std::string& out_path,
              const std::string& filter, std::size_t calls) {
  const auto timings = run_engine_bench(calls, seed.value_or(20260816));
  std::ostringstream os;
  os << "engine           ns/frame  (over " << calls << " calls)\n";
  for (const EngineTiming& t : timings) {
    const std::string name(engine_name(t.engine));
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    os << std::left << std::setw(17) << name << std::fixed << std::setprecision(1)
       << t.ns_per_call << "\n";
  }
  os << "ratio dualquat / baseline: " << std::fixed << std::setprecision(3)
     << dq_vs_baseline_ratio(timings) << "\n";
  std::cout << os.str();
  if (!out_path.empty()) write_text_file(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-algebra pose interpolation and keyframe stream simulation"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string packets_path;
  std::string filter;
  std::optional<std::uint64_t> seed;
  std::size_t bench_calls = 1000000;
  std::size_t table_calls = 200000;
  bool inject_fault = false;

  CLI::App* sim = app.add_subcommand("simulate", "run a scenario file and export traces");
  sim->add_option("scenario", scenario_path, "scenario JSON path")->required();
  sim->add_option("--out", out_path, "trace output path (suffixed per engine/rate)");
  sim->add_option("--packets", packets_path, "binary packet dump path");
  sim->add_option("--seed", seed, "override the scenario seed");
  sim->add_option("--filter", filter, "only run engines whose name contains this substring");

  CLI::App* tab = app.add_subcommand("table1", "bandwidth reduction table and cost ratio");
  tab->add_option("--seed", seed, "benchmark seed");
  tab->add_option("--out", out_path, "also write the table to this path");
  tab->add_option("--filter", filter, "only rows whose quality label contains this substring");
  tab->add_option("--calls", table_calls, "benchmark call count for the cost ratio");

  CLI::App* self = app.add_subcommand("selftest", "conformance property suites");
  self->add_option("--seed", seed, "suite seed");
  self->add_option("--out", out_path, "also write the report to this path");
  self->add_option("--filter", filter, "only suites whose name contains this substring");
  self->add_flag("--inject-fault", inject_fault,
                 "corrupt the PGA round-trip path to exercise failure reporting");

  CLI::App* bench = app.add_subcommand("bench", "per-engine interpolation cost");
  bench->add_option("--seed", seed, "request pool seed");
  bench->add_option("--out", out_path, "also write the report to this path");
  bench->add_option("--filter", filter, "only engines whose name contains this substring");
  bench->add_option("--calls", bench_calls, "interpolation calls per engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // malformed invocation
  }

  try {
    if (sim->parsed()) return cmd_simulate(scenario_path, out_path, packets_path, seed, filter);
    if (tab->parsed()) return cmd_table1(seed, out_path, filter, table_calls);
    if (self->parsed()) return cmd_selftest(seed, out_path, filter, inject_fault);
    if (bench->parsed()) return cmd_bench(seed, out_path, filter, bench_calls);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
