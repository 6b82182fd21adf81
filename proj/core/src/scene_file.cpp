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

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blindspot/synthworld.hpp"

namespace blindspot {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::filesystem::path& path, int line_no, const std::string& what) {
  throw Error(ErrorKind::kMalformedLine,
              path.string() + ":" + std::to_string(line_no) + ": " + what);
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                  const std::filesystem::path& path, int line_no) {
  std::istringstream ss(text);
  std::vector<double> out;
  double value = 0.0;
  while (ss >> value) out.push_back(value);
  if (out.size() != expected) {
    fail(path, line_no, "expected " + std::to_string(expected) + " numbers, got " +
                            std::to_string(out.size()));
  }
  return out;
}

Eigen::Matrix3d yaw_rotation(double angle) {
  Eigen::Matrix3d r;
  r << std::cos(angle), 0.0, std::sin(angle),  //
      0.0, 1.0, 0.0,                           //
      -std::sin(angle), 0.0, std::cos(angle);
  return r;
}

struct TrajectorySpec {
  int frames = 0;
  Eigen::Vector3d start = Eigen::Vector3d::Zero();
  double speed = 0.0;     // meters per frame along the current heading
  double yaw = 0.0;       // initial heading, radians about +y
  double yaw_rate = 0.0;  // radians per frame
  std::vector<PoseSE3> explicit_poses;
};

std::vector<PoseSE3> build_trajectory(const TrajectorySpec& spec) {
  if (!spec.explicit_poses.empty()) return spec.explicit_poses;
  std::vector<PoseSE3> poses;
  Eigen::Vector3d position = spec.start;
  double heading = spec.yaw;
  for (int i = 0; i < spec.frames; ++i) {
    PoseSE3 pose;
    pose.rotation = yaw_rotation(heading);
    pose.translation = position;
    poses.push_back(pose);
    position += pose.rotation * Eigen::Vector3d{0.0, 0.0, spec.speed};
    heading += spec.yaw_rate;
  }
  return poses;
}

}  // namespace

SynthScene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kMissingFile, "cannot open scene file " + path.string());
  }

  SynthScene scene;
  scene.intrinsics = {};
  TrajectorySpec traj;
  std::optional<SynthBox> box;
  std::string section;
  std::string line;
  int line_no = 0;

  auto flush_box = [&] {
    if (box) {
      scene.boxes.push_back(*box);
      box.reset();
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    const auto hash = text.find('#');
    if (hash != std::string::npos) text = trim(text.substr(0, hash));
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') fail(path, line_no, "unterminated section header");
      flush_box();
      section = text.substr(1, text.size() - 2);
      if (section == "box") box = SynthBox{};
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(path, line_no, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    if (section == "camera") {
      const double v = parse_numbers(value, 1, path, line_no)[0];
      if (key == "fx") scene.intrinsics.fx = v;
      else if (key == "fy") scene.intrinsics.fy = v;
      else if (key == "cx") scene.intrinsics.cx = v;
      else if (key == "cy") scene.intrinsics.cy = v;
      else if (key == "width") scene.intrinsics.width = static_cast<int>(v);
      else if (key == "height") scene.intrinsics.height = static_cast<int>(v);
      else if (key == "fps") scene.fps = v;
      else fail(path, line_no, "unknown camera key '" + key + "'");
    } else if (section == "plane") {
      const double v = parse_numbers(value, 1, path, line_no)[0];
      if (key == "height") scene.ground_height = v;
      else if (key == "class") scene.ground_class = static_cast<int>(v);
      else fail(path, line_no, "unknown plane key '" + key + "'");
    } else if (section == "labels") {
      const double v = parse_numbers(value, 1, path, line_no)[0];
      if (key == "sky_class") scene.sky_class = static_cast<int>(v);
      else fail(path, line_no, "unknown labels key '" + key + "'");
    } else if (section == "box") {
      if (key == "center") {
        const auto v = parse_numbers(value, 3, path, line_no);
        box->center = {v[0], v[1], v[2]};
      } else if (key == "size") {
        const auto v = parse_numbers(value, 3, path, line_no);
        box->size = {v[0], v[1], v[2]};
      } else if (key == "class") {
        box->class_id = static_cast<int>(parse_numbers(value, 1, path, line_no)[0]);
      } else {
        fail(path, line_no, "unknown box key '" + key + "'");
      }
    } else if (section == "trajectory") {
      if (key == "frames") {
        traj.frames = static_cast<int>(parse_numbers(value, 1, path, line_no)[0]);
      } else if (key == "start") {
        const auto v = parse_numbers(value, 3, path, line_no);
        traj.start = {v[0], v[1], v[2]};
      } else if (key == "speed") {
        traj.speed = parse_numbers(value, 1, path, line_no)[0];
      } else if (key == "yaw") {
        traj.yaw = parse_numbers(value, 1, path, line_no)[0];
      } else if (key == "yaw_rate") {
        traj.yaw_rate = parse_numbers(value, 1, path, line_no)[0];
      } else if (key == "pose") {
        const auto v = parse_numbers(value, 12, path, line_no);
        PoseSE3 pose;
        pose.rotation << v[0], v[1], v[2], v[4], v[5], v[6], v[8], v[9], v[10];
        pose.translation = {v[3], v[7], v[11]};
        traj.explicit_poses.push_back(pose);
      } else {
        fail(path, line_no, "unknown trajectory key '" + key + "'");
      }
    } else {
      fail(path, line_no, "key outside of a known section");
    }
  }
  flush_box();

  scene.trajectory = build_trajectory(traj);
  scene.check();
  return scene;
}

}  // namespace blindspot
