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

#include "blindspot/pipeline.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace blindspot {

int PipelineParams::window() const {
  return static_cast<int>(std::lround(t_seconds * fps));
}

void PipelineParams::check() const {
  if (t_seconds <= 0.0 || fps <= 0.0 || l_d <= 0.0 || vis_distance <= 0.0 || min_area <= 0) {
    throw Error(ErrorKind::kInvalidInput, "pipeline parameters must be strictly positive");
  }
  if (window() < 1) {
    throw Error(ErrorKind::kInvalidInput, "look-ahead window must cover at least one frame");
  }
}

BinaryMask traversable_mask(const SemanticMap& sem, const LabelConfig& cfg) {
  cfg.check();
  BinaryMask out(sem.width(), sem.height(), 0);
  for (int y = 0; y < sem.height(); ++y) {
    for (int x = 0; x < sem.width(); ++x) {
      const int id = sem(x, y);
      if (!cfg.known(id)) {
        throw Error(ErrorKind::kInvalidInput,
                    "semantic label " + std::to_string(id) + " is not in the label table");
      }
      out(x, y) = cfg.traversable_ids.count(id) ? 1 : 0;
    }
  }
  return out;
}

AggregatedSurface aggregate_surface(std::span<const WarpResult> warped) {
  if (warped.empty()) {
    throw Error(ErrorKind::kInvalidInput, "aggregate_surface needs at least one warped frame");
  }
  const int w = warped.front().mask.width();
  const int h = warped.front().mask.height();
  for (const auto& item : warped) {
    if (item.mask.width() != w || item.mask.height() != h ||
        !item.mask.same_size(item.depth.values)) {
      throw Error(ErrorKind::kRasterMismatch, "aggregate_surface inputs disagree on raster size");
    }
  }

  AggregatedSurface agg{BinaryMask(w, h, 0), DepthMap(w, h), Grid<int>(w, h, 0)};
  Grid<double> sum(w, h, 0.0);
  for (const auto& item : warped) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (!item.mask(x, y)) continue;
        agg.surface(x, y) = 1;
        agg.support(x, y) += 1;
        sum(x, y) += item.depth.values(x, y);
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (agg.support(x, y) > 0) {
        agg.depth.set(x, y, static_cast<float>(sum(x, y) / agg.support(x, y)));
      }
    }
  }
  return agg;
}

BinaryMask raw_blind_spots(const BinaryMask& surface, const BinaryMask& traversable_now) {
  if (!surface.same_size(traversable_now)) {
    throw Error(ErrorKind::kRasterMismatch, "raw_blind_spots inputs disagree on raster size");
  }
  BinaryMask out(surface.width(), surface.height(), 0);
  for (int y = 0; y < surface.height(); ++y) {
    for (int x = 0; x < surface.width(); ++x) {
      out(x, y) = (surface(x, y) && !traversable_now(x, y)) ? 1 : 0;
    }
  }
  return out;
}

BinaryMask rectify_by_depth(const BinaryMask& omega_raw, const DepthMap& depth_now,
                            const DepthMap& aggregated_depth, double l_d) {
  if (!omega_raw.same_size(depth_now.values) || !omega_raw.same_size(aggregated_depth.values)) {
    throw Error(ErrorKind::kRasterMismatch, "rectify_by_depth inputs disagree on raster size");
  }
  BinaryMask out = omega_raw;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (!out(x, y)) continue;
      if (!depth_now.valid_at(x, y) || !aggregated_depth.valid_at(x, y)) continue;
      const double gap =
          std::abs(static_cast<double>(depth_now.values(x, y)) - aggregated_depth.values(x, y));
      if (gap < l_d) out(x, y) = 0;
    }
  }
  return out;
}

BinaryMask remove_small_components(const BinaryMask& mask, int min_area) {
  if (min_area < 1) {
    throw Error(ErrorKind::kInvalidInput, "min_area must be at least 1");
  }
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out = mask;
  Grid<std::uint8_t> seen(w, h, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::pair<int, int>> component;

  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      if (!mask(sx, sy) || seen(sx, sy)) continue;
      stack.clear();
      component.clear();
      stack.emplace_back(sx, sy);
      seen(sx, sy) = 1;
      while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        component.emplace_back(x, y);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            if (mask(nx, ny) && !seen(nx, ny)) {
              seen(nx, ny) = 1;
              stack.emplace_back(nx, ny);
            }
          }
        }
      }
      if (static_cast<int>(component.size()) < min_area) {
        for (const auto& [x, y] : component) out(x, y) = 0;
      }
    }
  }
  return out;
}

BinaryMask visibility_mask(const SemanticMap& sem, const DepthMap& depth_now,
                           const CameraIntrinsics& K, const LabelConfig& cfg,
                           double vis_distance) {
  if (!sem.same_size(depth_now.values) || sem.width() != K.width || sem.height() != K.height) {
    throw Error(ErrorKind::kRasterMismatch, "visibility_mask inputs disagree on raster size");
  }
  const double inv_fx = 1.0 / K.fx;
  const double inv_fy = 1.0 / K.fy;
  BinaryMask out(sem.width(), sem.height(), 0);
  for (int y = 0; y < sem.height(); ++y) {
    for (int x = 0; x < sem.width(); ++x) {
      if (cfg.sky_ids.count(sem(x, y))) {
        out(x, y) = 1;
        continue;
      }
      if (!depth_now.valid_at(x, y)) continue;
      const double d = depth_now.values(x, y);
      const Eigen::Vector3d p{(x - K.cx) * inv_fx * d, (y - K.cy) * inv_fy * d, d};
      out(x, y) = p.norm() < vis_distance ? 1 : 0;
    }
  }
  return out;
}

BlindSpotResult generate_frame(const Sequence& seq, int t, const PipelineParams& params) {
  params.check();
  const int window = params.window();
  const int last_ok = seq.frame_count() - 1 - window;
  if (t < 0 || t > last_ok) {
    throw Error(ErrorKind::kWindowUnderflow,
                "frame " + std::to_string(t) + " lacks " + std::to_string(window) +
                    " future frames; last processable index is " + std::to_string(last_ok));
  }

  const CameraIntrinsics& K = seq.intrinsics;
  const FrameBundle& now = seq.frames[t];
  const BinaryMask traversable_now = traversable_mask(now.semantic, seq.labels);

  std::vector<WarpResult> warped;
  warped.reserve(window);
  for (int i = 1; i <= window; ++i) {
    const FrameBundle& future = seq.frames[t + i];
    BinaryMask src = traversable_mask(future.semantic, seq.labels);
    // Pixels without depth cannot be warped.
    for (int y = 0; y < src.height(); ++y) {
      for (int x = 0; x < src.width(); ++x) {
        if (src(x, y) && !future.depth.valid_at(x, y)) src(x, y) = 0;
      }
    }
    warped.push_back(forward_warp(src, future.depth, relative_pose(future.pose, now.pose), K));
  }

  AggregatedSurface agg = aggregate_surface(warped);
  const BinaryMask raw = raw_blind_spots(agg.surface, traversable_now);
  const BinaryMask rectified = rectify_by_depth(raw, now.depth, agg.depth, params.l_d);

  BlindSpotResult result;
  result.omega = remove_small_components(rectified, params.min_area);
  result.visibility = visibility_mask(now.semantic, now.depth, K, seq.labels, params.vis_distance);
  result.aggregated_surface = std::move(agg.surface);
  result.aggregated_depth = std::move(agg.depth);
  result.support_count = std::move(agg.support);
  return result;
}

}  // namespace blindspot
