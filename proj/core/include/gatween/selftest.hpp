// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gatween {

struct SelftestOptions {
  std::uint64_t seed = 20260816;
  std::string filter;         // substring match on suite names; empty runs all
  bool inject_fault = false;  // corrupts the PGA round-trip path to exercise failure reporting
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // seed + inputs of the first failing case
};

// Conformance suites over seeded random inputs:
//   roundtrip_dq, roundtrip_pga, roundtrip_cga: encode/decode within 1e-9
//   isomorphism: cross-representation agreement within 1e-9
//   endpoint: every engine reproduces both endpoints within 1e-9
std::vector<SuiteResult> run_selftests(const SelftestOptions& opt);

}  // namespace gatween
