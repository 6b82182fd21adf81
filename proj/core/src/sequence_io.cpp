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

#include "blindspot/sequence_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "blindspot/image_io.hpp"

namespace blindspot {

namespace fs = std::filesystem;

namespace {

std::string frame_name(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d.png", index);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::ifstream open_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kMissingFile, "missing " + path.string());
  }
  return in;
}

CameraIntrinsics load_intrinsics(const fs::path& path) {
  std::ifstream in = open_text(path);
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  CameraIntrinsics K;
  if (!(ss >> K.fx >> K.fy >> K.cx >> K.cy >> K.width >> K.height)) {
    throw Error(ErrorKind::kMalformedLine,
                path.string() + ":1: expected 'fx fy cx cy width height'");
  }
  return K;
}

std::vector<PoseSE3> load_poses(const fs::path& path) {
  std::ifstream in = open_text(path);
  std::vector<PoseSE3> poses;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream ss(line);
    std::vector<double> v;
    double value = 0.0;
    while (ss >> value) v.push_back(value);
    if (v.size() != 12) {
      throw Error(ErrorKind::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) + ": expected 12 numbers, got " +
                      std::to_string(v.size()));
    }
    PoseSE3 pose;
    pose.rotation << v[0], v[1], v[2], v[4], v[5], v[6], v[8], v[9], v[10];
    pose.translation = {v[3], v[7], v[11]};
    poses.push_back(pose);
  }
  return poses;
}

std::set<int> parse_id_list(const std::string& text, const fs::path& path, int line_no) {
  std::string cleaned = text;
  for (auto& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream ss(cleaned);
  std::set<int> ids;
  int id = 0;
  while (ss >> id) ids.insert(id);
  std::string rest;
  if (ss.clear(), ss >> rest) {
    throw Error(ErrorKind::kMalformedLine,
                path.string() + ":" + std::to_string(line_no) + ": expected integer ids");
  }
  return ids;
}

LabelConfig load_labels(const fs::path& path) {
  std::ifstream in = open_text(path);
  LabelConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) + ": expected 'key = ids'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::set<int> ids = parse_id_list(text.substr(eq + 1), path, line_no);
    if (key == "traversable_ids") cfg.traversable_ids = ids;
    else if (key == "sky_ids") cfg.sky_ids = ids;
    else if (key == "obstacle_ids") cfg.obstacle_ids = ids;
    else if (key == "other_ids") cfg.other_ids = ids;
    else {
      throw Error(ErrorKind::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

int count_frames(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorKind::kMissingFile, "missing directory " + dir.string());
  }
  int count = 0;
  while (fs::exists(dir / frame_name(count))) ++count;
  return count;
}

void write_id_list(std::ostream& out, const char* key, const std::set<int>& ids) {
  out << key << " =";
  for (int id : ids) out << " " << id;
  out << "\n";
}

}  // namespace

Sequence load_sequence(const fs::path& dir) {
  Sequence seq;
  seq.intrinsics = load_intrinsics(dir / "intrinsics.txt");
  seq.labels = load_labels(dir / "labels.cfg");

  if (fs::exists(dir / "fps.txt")) {
    std::ifstream in = open_text(dir / "fps.txt");
    if (!(in >> seq.fps)) {
      throw Error(ErrorKind::kMalformedLine, (dir / "fps.txt").string() + ":1: expected a number");
    }
  }

  const std::vector<PoseSE3> poses = load_poses(dir / "poses.txt");
  const int depth_count = count_frames(dir / "depth");
  const int semantic_count = count_frames(dir / "semantic");
  if (depth_count != static_cast<int>(poses.size()) || depth_count != semantic_count ||
      depth_count == 0) {
    throw Error(ErrorKind::kCountMismatch,
                dir.string() + ": " + std::to_string(poses.size()) + " poses vs " +
                    std::to_string(depth_count) + " depth vs " + std::to_string(semantic_count) +
                    " semantic frames");
  }

  const bool has_rgb = fs::is_directory(dir / "rgb");
  seq.frames.reserve(depth_count);
  for (int i = 0; i < depth_count; ++i) {
    FrameBundle frame;
    frame.depth = depth_from_png(dir / "depth" / frame_name(i));
    frame.semantic = read_png_gray8(dir / "semantic" / frame_name(i));
    frame.pose = poses[i];
    if (has_rgb && fs::exists(dir / "rgb" / frame_name(i))) {
      frame.rgb = read_png_rgb8(dir / "rgb" / frame_name(i));
    }
    if (frame.depth.width() != seq.intrinsics.width ||
        frame.depth.height() != seq.intrinsics.height) {
      throw Error(ErrorKind::kRasterMismatch,
                  "depth/" + frame_name(i) + " disagrees with the intrinsics raster");
    }
    if (!frame.depth.values.same_size(frame.semantic)) {
      throw Error(ErrorKind::kRasterMismatch,
                  "semantic/" + frame_name(i) + " disagrees with the intrinsics raster");
    }
    seq.frames.push_back(std::move(frame));
  }

  seq.check();
  return seq;
}

void save_sequence(const Sequence& seq, const fs::path& dir) {
  seq.check();
  fs::create_directories(dir / "depth");
  fs::create_directories(dir / "semantic");
  const bool any_rgb =
      std::any_of(seq.frames.begin(), seq.frames.end(), [](const auto& f) { return f.rgb.has_value(); });
  if (any_rgb) fs::create_directories(dir / "rgb");

  {
    std::ofstream out(dir / "intrinsics.txt");
    out << std::setprecision(17) << seq.intrinsics.fx << " " << seq.intrinsics.fy << " "
        << seq.intrinsics.cx << " " << seq.intrinsics.cy << " " << seq.intrinsics.width << " "
        << seq.intrinsics.height << "\n";
  }
  {
    std::ofstream out(dir / "fps.txt");
    out << std::setprecision(17) << seq.fps << "\n";
  }
  {
    std::ofstream out(dir / "labels.cfg");
    write_id_list(out, "traversable_ids", seq.labels.traversable_ids);
    write_id_list(out, "sky_ids", seq.labels.sky_ids);
    write_id_list(out, "obstacle_ids", seq.labels.obstacle_ids);
    if (!seq.labels.other_ids.empty()) write_id_list(out, "other_ids", seq.labels.other_ids);
  }
  {
    std::ofstream out(dir / "poses.txt");
    out << std::setprecision(17);
    for (const auto& frame : seq.frames) {
      const Eigen::Matrix3d& r = frame.pose.rotation;
      const Eigen::Vector3d& t = frame.pose.translation;
      for (int row = 0; row < 3; ++row) {
        out << r(row, 0) << " " << r(row, 1) << " " << r(row, 2) << " " << t(row);
        out << (row == 2 ? "\n" : " ");
      }
    }
  }

  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    const FrameBundle& frame = seq.frames[i];
    write_depth_png(dir / "depth" / frame_name(static_cast<int>(i)), frame.depth);
    write_png_gray8(dir / "semantic" / frame_name(static_cast<int>(i)), frame.semantic);
    if (frame.rgb) {
      write_png_rgb8(dir / "rgb" / frame_name(static_cast<int>(i)), *frame.rgb);
    }
  }
}

void save_outputs(const BlindSpotResult& result, const fs::path& dir, int frame,
                  bool debug_rasters) {
  fs::create_directories(dir / "blindspot");
  fs::create_directories(dir / "visibility");
  write_mask_png(dir / "blindspot" / frame_name(frame), result.omega);
  write_mask_png(dir / "visibility" / frame_name(frame), result.visibility);
  if (debug_rasters) {
    fs::create_directories(dir / "aggregated_surface");
    fs::create_directories(dir / "aggregated_depth");
    write_mask_png(dir / "aggregated_surface" / frame_name(frame), result.aggregated_surface);
    write_depth_png(dir / "aggregated_depth" / frame_name(frame), result.aggregated_depth);
  }
}

}  // namespace blindspot
