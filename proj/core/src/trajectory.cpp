// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#include "gatween/trajectory.hpp"

#include <algorithm>
#include <utility>

#include "gatween/codec.hpp"
#include "gatween/errors.hpp"

namespace gatween {

Trajectory::Trajectory(std::vector<double> times, std::vector<Pose> poses)
    : times_(std::move(times)), poses_(std::move(poses)) {
  if (times_.empty() || times_.size() != poses_.size()) {
    throw Error("Trajectory: need one pose per time, at least one");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw Error("Trajectory: times must strictly increase");
  }
  keys_.reserve(poses_.size());
  for (const Pose& p : poses_) keys_.push_back(pose_to_dq(p));
}

Pose Trajectory::sample(double t) const {
  if (t <= times_.front()) return poses_.front().canonicalized();
  if (t >= times_.back()) return poses_.back().canonicalized();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  const std::size_t lo = hi - 1;
  const double a = (t - times_[lo]) / (times_[hi] - times_[lo]);
  return dq_to_pose(sclerp(keys_[lo], keys_[hi], a));
}

}  // namespace gatween
