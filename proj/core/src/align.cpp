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

#include "blindspot/align.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace blindspot {

namespace {

double domain_value(double slam_depth, DepthDomain domain) {
  return domain == DepthDomain::kDepth ? slam_depth : 1.0 / slam_depth;
}

}  // namespace

AlignmentFit fit_alignment(std::span<const LandmarkSample> samples, DepthDomain domain,
                           bool pin_shift) {
  const int n = static_cast<int>(samples.size());
  if (n < 2) {
    throw Error(ErrorKind::kDegenerateFit, "alignment needs at least two samples");
  }

  double sum_v = 0.0, sum_g = 0.0;
  for (const auto& s : samples) {
    if (!(s.slam_depth > 0.0) || !std::isfinite(s.mono_value)) {
      throw Error(ErrorKind::kInvalidInput, "landmark sample with non-positive depth");
    }
    sum_v += s.mono_value;
    sum_g += domain_value(s.slam_depth, domain);
  }
  const double mean_v = sum_v / n;
  const double mean_g = sum_g / n;

  double svv = 0.0, sgg = 0.0, svg = 0.0, svv_raw = 0.0, svg_raw = 0.0;
  for (const auto& s : samples) {
    const double v = s.mono_value;
    const double g = domain_value(s.slam_depth, domain);
    svv += (v - mean_v) * (v - mean_v);
    sgg += (g - mean_g) * (g - mean_g);
    svg += (v - mean_v) * (g - mean_g);
    svv_raw += v * v;
    svg_raw += v * g;
  }
  if (svv <= 0.0) {
    throw Error(ErrorKind::kDegenerateFit, "monocular values have zero variance");
  }

  AlignmentFit fit;
  fit.n = n;
  if (pin_shift) {
    if (svv_raw <= 0.0) {
      throw Error(ErrorKind::kDegenerateFit, "monocular values are all zero");
    }
    fit.scale = svg_raw / svv_raw;
    fit.shift = 0.0;
  } else {
    fit.scale = svg / svv;
    fit.shift = mean_g - fit.scale * mean_v;
  }
  fit.pearson_r = sgg > 0.0 ? svg / std::sqrt(svv * sgg) : 0.0;
  return fit;
}

bool gate_video(const AlignmentFit& fit, double threshold) {
  return fit.pearson_r >= threshold;
}

DepthMap apply_alignment(const DepthMap& mono, const AlignmentFit& fit, DepthDomain domain) {
  DepthMap out(mono.width(), mono.height());
  for (int y = 0; y < mono.height(); ++y) {
    for (int x = 0; x < mono.width(); ++x) {
      if (!mono.valid_at(x, y)) continue;
      const double aligned = fit.scale * mono.values(x, y) + fit.shift;
      const double metric = domain == DepthDomain::kDepth ? aligned : 1.0 / aligned;
      if (std::isfinite(metric) && metric > 0.0) {
        out.set(x, y, static_cast<float>(metric));
      }
    }
  }
  return out;
}

std::vector<LandmarkSample> load_landmarks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kMissingFile, "cannot open landmark file " + path.string());
  }
  std::vector<LandmarkSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    LandmarkSample s;
    if (!(ss >> s.frame >> s.u >> s.v >> s.slam_depth >> s.mono_value)) {
      throw Error(ErrorKind::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected 'frame u v slam_depth mono_value'");
    }
    std::string extra;
    if (ss >> extra) {
      throw Error(ErrorKind::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) + ": trailing fields");
    }
    samples.push_back(s);
  }
  return samples;
}

}  // namespace blindspot
