// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gatween/dual_quaternion.hpp"
#include "gatween/multivector.hpp"
#include "gatween/pose.hpp"

namespace gatween {

// Encoders map a pose to a unit transform representation; decoders
// invert them and return a sign-canonical pose. Decoders validate
// their input: NonUnitInput when the representation is not unit norm
// within 1e-6, NotAMotor when a multivector carries odd-grade
// content above 1e-6.

DualQuaternion pose_to_dq(const Pose& p);
Pose dq_to_pose(const DualQuaternion& d);

MultivectorPGA pose_to_pga_motor(const Pose& p);
Pose pga_motor_to_pose(const MultivectorPGA& m);

MultivectorCGA pose_to_cga_motor(const Pose& p);
Pose cga_motor_to_pose(const MultivectorCGA& m);

// Coefficient-level isomorphism between PGA motors and dual
// quaternions. Composition is preserved: the image of a motor
// product is the product of the images.
DualQuaternion pga_motor_to_dq(const MultivectorPGA& m);
MultivectorPGA dq_to_pga_motor(const DualQuaternion& d);

// Encodes p through all three representations, decodes each, and
// additionally routes the PGA motor through the dual quaternion
// isomorphism. Returns the largest pairwise deviation over the
// decoded poses (translation and canonicalized rotation components).
double cross_encode_check(const Pose& p);

}  // namespace gatween
