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

#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "blindspot/sequence.hpp"

namespace blindspot {

/// Axis-aligned occluder. `center` and `size` are in world coordinates
/// (x right, y down, z forward; the ground plane is y = ground_height).
struct SynthBox {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d size = Eigen::Vector3d::Zero();
  int class_id = 3;

  Eigen::Vector3d min() const { return center - 0.5 * size; }
  Eigen::Vector3d max() const { return center + 0.5 * size; }
};

/// Parametric world: an infinite ground plane, box occluders, and a camera
/// trajectory. Everything renders and ray-casts exactly, which makes the
/// scene its own ground truth.
struct SynthScene {
  double ground_height = 1.5;  // plane y = ground_height; cameras stay above it
  int ground_class = 1;
  int sky_class = 0;
  std::vector<SynthBox> boxes;
  std::vector<PoseSE3> trajectory;
  CameraIntrinsics intrinsics;
  double fps = 5.0;

  /// Throws kInvariantViolation for cameras on/below the plane or inside a
  /// box, non-positive box extents, or a trajectory shorter than two poses.
  void check() const;

  LabelConfig label_config() const;
};

/// Renders hit distances beyond this as invalid depth (keeps the on-disk
/// 16-bit depth encoding exact).
inline constexpr double kMaxRenderDepth = 250.0;

/// Exact per-pixel ray cast of frame t: depth is the camera-frame Z of the
/// nearest hit, the semantic label is the class of the nearest hit (sky when
/// the ray escapes). Deterministic.
FrameBundle render(const SynthScene& scene, int t);

/// Renders every trajectory frame into a Sequence.
Sequence synthesize_sequence(const SynthScene& scene);

/// Exact occlusion ground truth for frame t.
struct OracleMaps {
  BinaryMask true_blind;    // ground point exists but is blocked by a box now
  BinaryMask tframe_blind;  // additionally seen by some camera within the next T frames
  BinaryMask road_visible;  // the ray's first hit is the ground
};

/// Brute-force segment-occlusion oracle: for every pixel of frame t whose ray
/// reaches the ground plane at P, tests whether P is blocked now and whether
/// any of the next T cameras sees P unblocked inside its raster.
/// Throws kWindowUnderflow when the trajectory is too short.
OracleMaps oracle_blind_spots(const SynthScene& scene, int t, int window);

/// Parses the plain-text scene description (sections [camera], [plane],
/// [labels], [box]..., [trajectory]).
SynthScene load_scene(const std::filesystem::path& path);

}  // namespace blindspot
