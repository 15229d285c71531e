// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gatween/engines.hpp"

namespace gatween {

struct EngineTiming {
  EngineKind engine = EngineKind::Baseline;
  double ns_per_call = 0.0;
};

// Times interpolate() per engine over `calls` invocations cycling
// through a fixed pool of seeded random requests. Wall-clock numbers,
// reported rather than asserted.
std::vector<EngineTiming> run_engine_bench(std::size_t calls, std::uint64_t seed);

// dualquat ns / baseline ns from a timing table.
double dq_vs_baseline_ratio(const std::vector<EngineTiming>& timings);

}  // namespace gatween
