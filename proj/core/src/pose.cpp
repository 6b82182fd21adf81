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

#include "blindspot/pose.hpp"

#include "blindspot/error.hpp"

namespace blindspot {

namespace {
constexpr double kOrthonormalTol = 1e-9;
}

PoseSE3 PoseSE3::inverse() const {
  PoseSE3 inv;
  inv.rotation = rotation.transpose();
  inv.translation = -(inv.rotation * translation);
  return inv;
}

PoseSE3 PoseSE3::compose(const PoseSE3& other) const {
  PoseSE3 out;
  out.rotation = rotation * other.rotation;
  out.translation = rotation * other.translation + translation;
  return out;
}

void PoseSE3::check() const {
  if (!rotation.allFinite() || !translation.allFinite()) {
    throw Error(ErrorKind::kInvariantViolation, "pose holds non-finite entries");
  }
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kOrthonormalTol) {
    throw Error(ErrorKind::kInvariantViolation, "rotation is not orthonormal");
  }
  if (std::abs(rotation.determinant() - 1.0) > kOrthonormalTol) {
    throw Error(ErrorKind::kInvariantViolation, "rotation determinant is not +1");
  }
}

bool PoseSE3::is_identity(double tol) const {
  return (rotation - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
         translation.cwiseAbs().maxCoeff() <= tol;
}

PoseSE3 relative_pose(const PoseSE3& src, const PoseSE3& dst) {
  return dst.inverse().compose(src);
}

}  // namespace blindspot
