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
#include <span>
#include <vector>

#include "blindspot/raster.hpp"

namespace blindspot {

/// Whether the relative monocular values live in depth or inverse-depth
/// space. Relative depth predictors usually emit affine-invariant inverse
/// depth, so that is the default throughout.
enum class DepthDomain {
  kDepth,
  kInverseDepth,
};

/// One sparse correspondence between a metric SLAM landmark and the relative
/// monocular value at its pixel.
struct LandmarkSample {
  int frame = 0;
  double u = 0.0;
  double v = 0.0;
  double slam_depth = 0.0;  // meters, > 0
  double mono_value = 0.0;  // unitless
};

/// Least squares fit g(slam_depth) = scale * mono_value + shift together with
/// the correlation used to accept or reject the video.
struct AlignmentFit {
  double scale = 1.0;
  double shift = 0.0;
  double pearson_r = 0.0;
  int n = 0;
};

/// Ordinary least squares over all samples of a video. g is the identity for
/// the depth domain and d -> 1/d for the inverse-depth domain. With
/// pin_shift the shift is fixed to zero and only the scale is estimated.
/// Throws kDegenerateFit for fewer than two samples or zero variance in the
/// monocular values.
AlignmentFit fit_alignment(std::span<const LandmarkSample> samples, DepthDomain domain,
                           bool pin_shift = false);

/// Accept the video iff the correlation reaches the threshold.
bool gate_video(const AlignmentFit& fit, double threshold = 0.7);

/// Converts a relative monocular map to metric depth using the fit. Outputs
/// that come out non-positive or non-finite are marked invalid per pixel.
DepthMap apply_alignment(const DepthMap& mono, const AlignmentFit& fit, DepthDomain domain);

/// Parses a landmark file with one "frame u v slam_depth mono_value" record
/// per line. Throws kMissingFile / kMalformedLine with the offending line.
std::vector<LandmarkSample> load_landmarks(const std::filesystem::path& path);

}  // namespace blindspot
