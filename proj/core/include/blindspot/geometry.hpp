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

#include <optional>

#include <Eigen/Dense>

#include "blindspot/camera.hpp"
#include "blindspot/pose.hpp"
#include "blindspot/raster.hpp"

namespace blindspot {

/// Image point plus camera-frame depth produced by project().
struct ProjectedPoint {
  Eigen::Vector2d px;
  double depth = 0.0;
};

/// Lifts pixel (u, v) at the given metric depth to a camera-frame 3D point.
/// Throws kInvalidInput for non-positive depth or a pixel outside the raster.
Eigen::Vector3d backproject(const Eigen::Vector2d& px, double depth, const CameraIntrinsics& K);

/// Projects a camera-frame point to the image plane. Returns nullopt for
/// points at or behind the camera (Z <= 0). The returned pixel may lie
/// outside the raster; callers clip.
std::optional<ProjectedPoint> project(const Eigen::Vector3d& p, const CameraIntrinsics& K);

struct WarpResult {
  BinaryMask mask;
  DepthMap depth;
};

/// Forward-warps per-pixel evidence from a source frame into a target frame
/// sharing the same intrinsics. Every masked source pixel is backprojected at
/// its depth, moved by `rel` (source camera frame -> target camera frame),
/// reprojected, and splatted as a 2x2 block anchored at the floor of the
/// landing coordinate. On collisions the smallest target-frame Z wins. The
/// output depth is valid exactly where the output mask is 1.
WarpResult forward_warp(const BinaryMask& mask, const DepthMap& depth_src, const PoseSE3& rel,
                        const CameraIntrinsics& K);

}  // namespace blindspot
