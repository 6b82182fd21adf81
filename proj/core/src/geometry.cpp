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

#include "blindspot/geometry.hpp"

#include <cmath>

namespace blindspot {

Eigen::Vector3d backproject(const Eigen::Vector2d& px, double depth, const CameraIntrinsics& K) {
  if (!(depth > 0.0) || !std::isfinite(depth)) {
    throw Error(ErrorKind::kInvalidInput, "backproject requires a positive finite depth");
  }
  if (px.x() < 0.0 || px.x() > K.width - 1 || px.y() < 0.0 || px.y() > K.height - 1) {
    throw Error(ErrorKind::kInvalidInput, "backproject requires a pixel inside the raster");
  }
  return {(px.x() - K.cx) * depth / K.fx, (px.y() - K.cy) * depth / K.fy, depth};
}

std::optional<ProjectedPoint> project(const Eigen::Vector3d& p, const CameraIntrinsics& K) {
  if (p.z() <= 0.0) return std::nullopt;
  return ProjectedPoint{{K.fx * p.x() / p.z() + K.cx, K.fy * p.y() / p.z() + K.cy}, p.z()};
}

WarpResult forward_warp(const BinaryMask& mask, const DepthMap& depth_src, const PoseSE3& rel,
                        const CameraIntrinsics& K) {
  if (mask.width() != K.width || mask.height() != K.height || !mask.same_size(depth_src.values)) {
    throw Error(ErrorKind::kRasterMismatch, "forward_warp inputs disagree on raster size");
  }

  WarpResult out{BinaryMask(K.width, K.height, 0), DepthMap(K.width, K.height)};

  const double inv_fx = 1.0 / K.fx;
  const double inv_fy = 1.0 / K.fy;

  for (int y = 0; y < K.height; ++y) {
    const double ry = (y - K.cy) * inv_fy;
    for (int x = 0; x < K.width; ++x) {
      if (!mask(x, y) || !depth_src.valid_at(x, y)) continue;
      const double d = depth_src.values(x, y);
      const Eigen::Vector3d p{(x - K.cx) * inv_fx * d, ry * d, d};
      const Eigen::Vector3d q = rel.apply(p);
      if (q.z() <= 0.0) continue;
      const double u = K.fx * q.x() / q.z() + K.cx;
      const double v = K.fy * q.y() / q.z() + K.cy;
      const int iu = static_cast<int>(std::floor(u));
      const int iv = static_cast<int>(std::floor(v));
      const float z = static_cast<float>(q.z());
      for (int dy = 0; dy < 2; ++dy) {
        const int ty = iv + dy;
        if (ty < 0 || ty >= K.height) continue;
        for (int dx = 0; dx < 2; ++dx) {
          const int tx = iu + dx;
          if (tx < 0 || tx >= K.width) continue;
          if (!out.mask(tx, ty) || z < out.depth.values(tx, ty)) {
            out.mask(tx, ty) = 1;
            out.depth.set(tx, ty, z);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace blindspot
