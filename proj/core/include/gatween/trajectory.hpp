// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gatween/dual_quaternion.hpp"
#include "gatween/pose.hpp"

namespace gatween {

// Ground-truth rigid trajectory: control poses at strictly increasing
// times, connected by constant-screw segments. Queries outside the
// time range clamp to the nearest endpoint.
class Trajectory {
 public:
  Trajectory(std::vector<double> times, std::vector<Pose> poses);

  Pose sample(double t) const;

  double start_time() const { return times_.front(); }
  double end_time() const { return times_.back(); }
  double duration() const { return times_.back() - times_.front(); }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Pose>& poses() const { return poses_; }

 private:
  std::vector<double> times_;
  std::vector<Pose> poses_;
  std::vector<DualQuaternion> keys_;  // pose encodings, for segment screws
};

}  // namespace gatween
