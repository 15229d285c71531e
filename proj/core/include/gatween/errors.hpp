// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gatween {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input that must be unit-norm (quaternion, dual quaternion, motor)
// deviates from unit norm by more than the documented tolerance.
class NonUnitInput : public Error {
 public:
  using Error::Error;
};

// An interpolation blend collapsed to a numerically unusable state,
// e.g. a motor norm too close to zero to renormalize.
class DegenerateBlend : public Error {
 public:
  using Error::Error;
};

// A multivector handed to a motor-only operation carries non-motor
// content (odd-grade coefficients) above tolerance.
class NotAMotor : public Error {
 public:
  using Error::Error;
};

// A reconstruction was asked to render from an empty keyframe stream.
class NoKeyframes : public Error {
 public:
  using Error::Error;
};

// A scenario file is malformed: unknown key, missing key, or a value
// outside its documented range. The message names the offending key.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace gatween
