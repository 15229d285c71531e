// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "gatween/codec.hpp"
#include "gatween/engines.hpp"
#include "gatween/sampling.hpp"

namespace gatween {

namespace {

std::string describe_pose(const Pose& p) {
  std::ostringstream os;
  os.precision(17);
  os << "t=(" << p.t.x << ", " << p.t.y << ", " << p.t.z << ") q=(" << p.q.x << ", " << p.q.y
     << ", " << p.q.z << ", " << p.q.w << ")";
  return os.str();
}

SuiteResult run_pose_suite(const std::string& name, std::uint64_t seed, std::size_t cases,
                           const std::function<double(const Pose&, std::mt19937_64&)>& deviation,
                           double tol) {
  SuiteResult res{name, cases, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Pose p = random_pose(rng);
    const double dev = deviation(p, rng);
    if (!(dev <= tol)) {
      ++res.failures;
      if (res.first_failure.empty()) {
        std::ostringstream os;
        os << "case " << i << " (seed " << seed << "): deviation " << dev << " > " << tol
           << " for " << describe_pose(p);
        res.first_failure = os.str();
      }
    }
  }
  return res;
}

}  // namespace

std::vector<SuiteResult> run_selftests(const SelftestOptions& opt) {
  constexpr double kTol = 1e-9;
  const bool fault = opt.inject_fault;

  struct SuiteSpec {
    std::string name;
    std::function<SuiteResult(std::uint64_t)> run;
  };

  const std::vector<SuiteSpec> suites = {
      {"roundtrip_dq",
       [&](std::uint64_t seed) {
         return run_pose_suite("roundtrip_dq", seed, 500,
                               [](const Pose& p, std::mt19937_64&) {
                                 return pose_deviation(p, dq_to_pose(pose_to_dq(p)));
                               },
                               kTol);
       }},
      {"roundtrip_pga",
       [&](std::uint64_t seed) {
         return run_pose_suite("roundtrip_pga", seed, 500,
                               [fault](const Pose& p, std::mt19937_64&) {
                                 Pose back = pga_motor_to_pose(pose_to_pga_motor(p));
                                 // Opt-in mutation: emulate a sign slip in
                                 // the translation extraction so the failure
                                 // path itself stays tested.
                                 if (fault) back.t.x = -back.t.x;
                                 return pose_deviation(p, back);
                               },
                               kTol);
       }},
      {"roundtrip_cga",
       [&](std::uint64_t seed) {
         return run_pose_suite("roundtrip_cga", seed, 500,
                               [](const Pose& p, std::mt19937_64&) {
                                 return pose_deviation(p, cga_motor_to_pose(pose_to_cga_motor(p)));
                               },
                               kTol);
       }},
      {"isomorphism",
       [&](std::uint64_t seed) {
         return run_pose_suite("isomorphism", seed, 500,
                               [](const Pose& p, std::mt19937_64&) {
                                 return cross_encode_check(p);
                               },
                               kTol);
       }},
      {"endpoint",
       [&](std::uint64_t seed) {
         return run_pose_suite("endpoint", seed, 200,
                               [](const Pose& p, std::mt19937_64& rng) {
                                 const Pose other = random_pose(rng);
                                 double worst = 0.0;
                                 for (EngineKind kind : kAllEngines) {
                                   const Pose at0 = interpolate(kind, {p, other, 0.0});
                                   const Pose at1 = interpolate(kind, {p, other, 1.0});
                                   worst = std::max(worst, pose_deviation(at0, p));
                                   worst = std::max(worst, pose_deviation(at1, other));
                                 }
                                 return worst;
                               },
                               kTol);
       }},
  };

  std::vector<SuiteResult> out;
  for (const SuiteSpec& suite : suites) {
    if (!opt.filter.empty() && suite.name.find(opt.filter) == std::string::npos) continue;
    out.push_back(suite.run(opt.seed));
  }
  return out;
}

}  // namespace gatween
