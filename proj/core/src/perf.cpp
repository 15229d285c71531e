// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/perf.hpp"

#include <chrono>

#include "gatween/errors.hpp"
#include "gatween/sampling.hpp"

namespace gatween {

std::vector<EngineTiming> run_engine_bench(std::size_t calls, std::uint64_t seed) {
  constexpr std::size_t kPool = 256;
  std::mt19937_64 rng(seed);
  std::vector<InterpRequest> pool;
  pool.reserve(kPool);
  for (std::size_t i = 0; i < kPool; ++i) {
    pool.push_back({random_pose(rng), random_pose(rng), uniform01(rng)});
  }

  std::vector<EngineTiming> out;
  out.reserve(kAllEngines.size());
  double sink = 0.0;
  for (EngineKind kind : kAllEngines) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < calls; ++i) {
      const Pose p = interpolate(kind, pool[i % kPool]);
      sink += p.t.x + p.q.w;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    out.push_back({kind, ns / static_cast<double>(calls)});
  }
  // Keep the accumulated results observable so the loops cannot be
  // optimized away.
  volatile double guard = sink;
  (void)guard;
  return out;
}

double dq_vs_baseline_ratio(const std::vector<EngineTiming>& timings) {
  double baseline = 0.0;
  double dq = 0.0;
  for (const EngineTiming& t : timings) {
    if (t.engine == EngineKind::Baseline) baseline = t.ns_per_call;
    if (t.engine == EngineKind::DualQuat) dq = t.ns_per_call;
  }
  if (baseline <= 0.0 || dq <= 0.0) throw Error("dq_vs_baseline_ratio: missing timings");
  return dq / baseline;
}

}  // namespace gatween
