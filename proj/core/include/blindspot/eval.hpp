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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <vector>

#include "blindspot/raster.hpp"
#include "blindspot/sequence.hpp"

namespace blindspot {

/// Micro-averaged confusion counts and the derived ratios. Counting is
/// restricted to visibility-mask pixels. When the ground truth comes from a
/// sparse source, precision is meaningless and flagged not applicable.
struct MetricReport {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  int frames = 0;
  double iou = 0.0;
  double recall = 0.0;
  double precision = 0.0;
  double fn_rate = 0.0;
  bool precision_applicable = true;
};

/// Accumulates confusion counts over frames; ratios are computed once from
/// the summed counts (micro-averaging).
class MetricAccumulator {
 public:
  /// Counts pred vs gt on pixels where vis = 1. Throws kRasterMismatch on
  /// size disagreement.
  void add(const BinaryMask& pred, const BinaryMask& gt, const BinaryMask& vis);

  /// Throws kEmptyVisibility when no visible pixel was ever accumulated.
  MetricReport report(bool sparse_gt = false) const;

 private:
  std::uint64_t tp_ = 0, fp_ = 0, fn_ = 0, tn_ = 0;
  int frames_ = 0;
};

/// prob >= threshold, pixel-wise.
BinaryMask binarize(const Grid<double>& prob, double threshold);

/// Single-frame convenience wrapper around MetricAccumulator.
MetricReport masked_metrics(const BinaryMask& pred, const BinaryMask& gt, const BinaryMask& vis,
                            bool sparse_gt = false);

/// Picks the grid threshold with the best micro-averaged IoU over all
/// frames; ties break toward the lower threshold.
struct SweepResult {
  double threshold = 0.0;
  MetricReport report;
};
SweepResult threshold_sweep(std::span<const Grid<double>> probs, std::span<const BinaryMask> gts,
                            std::span<const BinaryMask> vis, std::span<const double> thresholds);

/// Baseline that proposes every obstacle-class pixel as a blind spot.
/// Throws kInvalidInput for labels missing from the config.
BinaryMask detection2d_baseline(const SemanticMap& sem, const LabelConfig& cfg);

/// Line-oriented key=value form of the report.
void write_report_text(std::ostream& out, const MetricReport& report);

/// JSON form of the report.
void write_report_json(const std::filesystem::path& path, const MetricReport& report);

}  // namespace blindspot
