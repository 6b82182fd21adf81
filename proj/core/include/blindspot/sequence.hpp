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
#include <set>
#include <vector>

#include "blindspot/camera.hpp"
#include "blindspot/pose.hpp"
#include "blindspot/raster.hpp"

namespace blindspot {

/// Interleaved 8-bit RGB image.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 3 bytes per pixel, row major

  RgbImage() = default;
  RgbImage(int w, int h)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, std::uint8_t{0}) {}

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }

  bool operator==(const RgbImage& other) const = default;
};

/// Semantic class groups. IDs not listed in any group are rejected as unknown.
struct LabelConfig {
  std::set<int> traversable_ids;  // road, pavement
  std::set<int> sky_ids;
  std::set<int> obstacle_ids;  // vehicle, pedestrian, cyclist
  std::set<int> other_ids;     // everything else that may legally appear

  bool known(int id) const {
    return traversable_ids.count(id) || sky_ids.count(id) || obstacle_ids.count(id) ||
           other_ids.count(id);
  }

  /// Throws kInvariantViolation unless traversable and sky groups are
  /// non-empty and disjoint.
  void check() const;
};

/// One frame worth of pipeline inputs.
struct FrameBundle {
  DepthMap depth;
  SemanticMap semantic;
  PoseSE3 pose;
  std::optional<RgbImage> rgb;
};

/// An ordered driving sequence with shared intrinsics. Frame indices run
/// contiguously from 0.
struct Sequence {
  CameraIntrinsics intrinsics;
  double fps = 5.0;
  LabelConfig labels;
  std::vector<FrameBundle> frames;

  int frame_count() const { return static_cast<int>(frames.size()); }

  /// Validates intrinsics, label config, per-frame raster sizes, poses and
  /// depth values. Throws kInvariantViolation on the first violation.
  void check() const;
};

}  // namespace blindspot
