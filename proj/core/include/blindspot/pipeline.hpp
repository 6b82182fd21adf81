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

#include <span>

#include "blindspot/geometry.hpp"
#include "blindspot/sequence.hpp"

namespace blindspot {

/// Knobs of the per-frame blind spot computation.
struct PipelineParams {
  double t_seconds = 5.0;      // look-ahead horizon
  double fps = 5.0;            // frames per second used to turn seconds into frames
  double l_d = 1.0;            // depth agreement threshold for erroneous-spot removal (m)
  int min_area = 100;          // connected components smaller than this are dropped (px)
  double vis_distance = 16.0;  // surface points closer than this are considered visible (m)

  /// Look-ahead window in frames, round(t_seconds * fps).
  int window() const;

  /// Throws kInvalidInput unless all parameters are positive and the window
  /// resolves to at least one frame.
  void check() const;
};

/// Per-frame output bundle: the blind spot map, the visibility mask, and the
/// aggregation intermediates that produced them.
struct BlindSpotResult {
  BinaryMask omega;               // final blind spots
  BinaryMask visibility;          // where supervision is meaningful
  BinaryMask aggregated_surface;  // OR of warped traversable masks
  DepthMap aggregated_depth;      // mean warped depth where evidence exists
  Grid<int> support_count;        // number of frames contributing per pixel
};

/// Mask of pixels whose semantic label belongs to the traversable group.
/// Throws kInvalidInput for labels missing from the config.
BinaryMask traversable_mask(const SemanticMap& sem, const LabelConfig& cfg);

struct AggregatedSurface {
  BinaryMask surface;
  DepthMap depth;
  Grid<int> support;
};

/// Pixel-wise OR of warped masks plus the per-pixel mean of contributing
/// warped depths. Depth is invalid where no frame contributed.
AggregatedSurface aggregate_surface(std::span<const WarpResult> warped);

/// Aggregated surface minus the currently visible traversable region.
BinaryMask raw_blind_spots(const BinaryMask& surface, const BinaryMask& traversable_now);

/// Clears blind spot pixels whose current depth agrees with the aggregated
/// warped depth within l_d (such pixels are visible surface, not occlusions).
/// Pixels with invalid current depth pass through unchanged.
BinaryMask rectify_by_depth(const BinaryMask& omega_raw, const DepthMap& depth_now,
                            const DepthMap& aggregated_depth, double l_d);

/// Zeroes every 8-connected component smaller than min_area pixels.
BinaryMask remove_small_components(const BinaryMask& mask, int min_area);

/// Visibility mask: sky pixels are always visible; other pixels are visible
/// iff their backprojected surface point lies within vis_distance of the
/// camera. Pixels without depth (and not sky) are invisible.
BinaryMask visibility_mask(const SemanticMap& sem, const DepthMap& depth_now,
                           const CameraIntrinsics& K, const LabelConfig& cfg,
                           double vis_distance);

/// Runs the full per-frame computation: warp the traversable evidence of the
/// next window() frames into frame t, aggregate, negate the visible surface,
/// rectify by depth, drop small components, and attach the visibility mask.
/// Throws kWindowUnderflow when fewer than window() frames follow t.
BlindSpotResult generate_frame(const Sequence& seq, int t, const PipelineParams& params);

}  // namespace blindspot
