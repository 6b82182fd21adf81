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

#include "blindspot/synthworld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace blindspot {

namespace {

constexpr double kRayEps = 1e-9;

/// Entry parameter of ray o + s*dir into the box, or +inf on miss. The ray
/// origin is assumed outside the box, so the entry is the first positive s.
double ray_box_entry(const Eigen::Vector3d& o, const Eigen::Vector3d& dir,
                     const Eigen::Vector3d& bmin, const Eigen::Vector3d& bmax) {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    if (std::abs(dir[axis]) < kRayEps) {
      if (o[axis] < bmin[axis] || o[axis] > bmax[axis]) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    double t1 = (bmin[axis] - o[axis]) / dir[axis];
    double t2 = (bmax[axis] - o[axis]) / dir[axis];
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
    if (lo > hi) return std::numeric_limits<double>::infinity();
  }
  return lo > kRayEps ? lo : std::numeric_limits<double>::infinity();
}

/// Whether the open segment a -> b crosses any box.
bool segment_blocked(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const std::vector<SynthBox>& boxes) {
  const Eigen::Vector3d dir = b - a;
  for (const auto& box : boxes) {
    double lo = kRayEps;
    double hi = 1.0 - kRayEps;
    bool miss = false;
    const Eigen::Vector3d bmin = box.min();
    const Eigen::Vector3d bmax = box.max();
    for (int axis = 0; axis < 3; ++axis) {
      if (std::abs(dir[axis]) < kRayEps) {
        if (a[axis] < bmin[axis] || a[axis] > bmax[axis]) {
          miss = true;
          break;
        }
        continue;
      }
      double t1 = (bmin[axis] - a[axis]) / dir[axis];
      double t2 = (bmax[axis] - a[axis]) / dir[axis];
      if (t1 > t2) std::swap(t1, t2);
      lo = std::max(lo, t1);
      hi = std::min(hi, t2);
      if (lo > hi) {
        miss = true;
        break;
      }
    }
    if (!miss) return true;
  }
  return false;
}

bool inside_box(const Eigen::Vector3d& p, const SynthBox& box) {
  const Eigen::Vector3d bmin = box.min();
  const Eigen::Vector3d bmax = box.max();
  return p.x() >= bmin.x() && p.x() <= bmax.x() && p.y() >= bmin.y() && p.y() <= bmax.y() &&
         p.z() >= bmin.z() && p.z() <= bmax.z();
}

}  // namespace

void SynthScene::check() const {
  intrinsics.check();
  if (fps <= 0.0) {
    throw Error(ErrorKind::kInvariantViolation, "scene fps must be positive");
  }
  if (trajectory.size() < 2) {
    throw Error(ErrorKind::kInvariantViolation, "trajectory needs at least two poses");
  }
  for (const auto& box : boxes) {
    if (box.size.minCoeff() <= 0.0) {
      throw Error(ErrorKind::kInvariantViolation, "boxes need positive extents");
    }
  }
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    trajectory[i].check();
    const Eigen::Vector3d& c = trajectory[i].translation;
    if (c.y() >= ground_height) {
      throw Error(ErrorKind::kInvariantViolation,
                  "camera " + std::to_string(i) + " is on or below the ground plane");
    }
    for (const auto& box : boxes) {
      if (inside_box(c, box)) {
        throw Error(ErrorKind::kInvariantViolation,
                    "camera " + std::to_string(i) + " is inside a box");
      }
    }
  }
}

LabelConfig SynthScene::label_config() const {
  LabelConfig cfg;
  cfg.traversable_ids.insert(ground_class);
  cfg.sky_ids.insert(sky_class);
  for (const auto& box : boxes) cfg.obstacle_ids.insert(box.class_id);
  return cfg;
}

FrameBundle render(const SynthScene& scene, int t) {
  if (t < 0 || t >= static_cast<int>(scene.trajectory.size())) {
    throw Error(ErrorKind::kInvalidInput, "render frame index out of range");
  }
  const CameraIntrinsics& K = scene.intrinsics;
  const PoseSE3& pose = scene.trajectory[t];
  const Eigen::Vector3d origin = pose.translation;

  FrameBundle frame;
  frame.depth = DepthMap(K.width, K.height);
  frame.semantic = SemanticMap(K.width, K.height, static_cast<std::uint8_t>(scene.sky_class));
  frame.pose = pose;

  for (int v = 0; v < K.height; ++v) {
    for (int u = 0; u < K.width; ++u) {
      // Unit Z camera ray, so the hit parameter equals camera-frame depth.
      const Eigen::Vector3d dir_cam{(u - K.cx) / K.fx, (v - K.cy) / K.fy, 1.0};
      const Eigen::Vector3d dir = pose.rotation * dir_cam;

      double nearest = std::numeric_limits<double>::infinity();
      int label = scene.sky_class;
      if (dir.y() > kRayEps) {
        const double s = (scene.ground_height - origin.y()) / dir.y();
        if (s > kRayEps) {
          nearest = s;
          label = scene.ground_class;
        }
      }
      for (const auto& box : scene.boxes) {
        const double s = ray_box_entry(origin, dir, box.min(), box.max());
        if (s < nearest) {
          nearest = s;
          label = box.class_id;
        }
      }

      frame.semantic(u, v) = static_cast<std::uint8_t>(label);
      if (std::isfinite(nearest) && nearest <= kMaxRenderDepth) {
        frame.depth.set(u, v, static_cast<float>(nearest));
      }
    }
  }
  return frame;
}

Sequence synthesize_sequence(const SynthScene& scene) {
  scene.check();
  Sequence seq;
  seq.intrinsics = scene.intrinsics;
  seq.fps = scene.fps;
  seq.labels = scene.label_config();
  seq.frames.reserve(scene.trajectory.size());
  for (int t = 0; t < static_cast<int>(scene.trajectory.size()); ++t) {
    seq.frames.push_back(render(scene, t));
  }
  return seq;
}

OracleMaps oracle_blind_spots(const SynthScene& scene, int t, int window) {
  const int last_ok = static_cast<int>(scene.trajectory.size()) - 1 - window;
  if (window < 1 || t < 0 || t > last_ok) {
    throw Error(ErrorKind::kWindowUnderflow,
                "oracle frame " + std::to_string(t) + " lacks " + std::to_string(window) +
                    " future frames; last processable index is " + std::to_string(last_ok));
  }
  const CameraIntrinsics& K = scene.intrinsics;
  const PoseSE3& pose = scene.trajectory[t];
  const Eigen::Vector3d origin = pose.translation;

  OracleMaps maps{BinaryMask(K.width, K.height, 0), BinaryMask(K.width, K.height, 0),
                  BinaryMask(K.width, K.height, 0)};

  for (int v = 0; v < K.height; ++v) {
    for (int u = 0; u < K.width; ++u) {
      const Eigen::Vector3d dir_cam{(u - K.cx) / K.fx, (v - K.cy) / K.fy, 1.0};
      const Eigen::Vector3d dir = pose.rotation * dir_cam;
      if (dir.y() <= kRayEps) continue;  // never reaches the ground
      const double s_ground = (scene.ground_height - origin.y()) / dir.y();
      if (s_ground <= kRayEps) continue;
      const Eigen::Vector3d ground_point = origin + s_ground * dir;

      const bool blocked_now = segment_blocked(origin, ground_point, scene.boxes);
      if (!blocked_now) {
        maps.road_visible(u, v) = 1;
        continue;
      }
      maps.true_blind(u, v) = 1;

      for (int i = 1; i <= window; ++i) {
        const PoseSE3& future = scene.trajectory[t + i];
        const Eigen::Vector3d in_cam =
            future.rotation.transpose() * (ground_point - future.translation);
        if (in_cam.z() <= 0.0) continue;
        const double pu = K.fx * in_cam.x() / in_cam.z() + K.cx;
        const double pv = K.fy * in_cam.y() / in_cam.z() + K.cy;
        if (pu < 0.0 || pu > K.width - 1 || pv < 0.0 || pv > K.height - 1) continue;
        if (!segment_blocked(future.translation, ground_point, scene.boxes)) {
          maps.tframe_blind(u, v) = 1;
          break;
        }
      }
    }
  }
  return maps;
}

}  // namespace blindspot
