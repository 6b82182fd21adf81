/* Copyright 2026 The Blindspot Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <Eigen/Dense>

namespace blindspot {

/// Rigid camera-to-world transform: x_world = rotation * x_camera + translation.
struct PoseSE3 {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

  PoseSE3 inverse() const;

  /// Composition (this ∘ other): apply `other` first, then `this`.
  PoseSE3 compose(const PoseSE3& other) const;

  /// Throws kInvariantViolation unless the rotation is orthonormal with
  /// determinant +1, both within 1e-9.
  void check() const;

  bool is_identity(double tol = 1e-12) const;
};

/// Transform taking points from the `src` camera frame to the `dst` camera
/// frame: dst^-1 ∘ src.
PoseSE3 relative_pose(const PoseSE3& src, const PoseSE3& dst);

}  // namespace blindspot
