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

#include "blindspot/eval.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace blindspot {

void MetricAccumulator::add(const BinaryMask& pred, const BinaryMask& gt, const BinaryMask& vis) {
  if (!pred.same_size(gt) || !pred.same_size(vis)) {
    throw Error(ErrorKind::kRasterMismatch, "metric inputs disagree on raster size");
  }
  for (int y = 0; y < pred.height(); ++y) {
    for (int x = 0; x < pred.width(); ++x) {
      if (!vis(x, y)) continue;
      const bool p = pred(x, y) != 0;
      const bool g = gt(x, y) != 0;
      tp_ += (p && g);
      fp_ += (p && !g);
      fn_ += (!p && g);
      tn_ += (!p && !g);
    }
  }
  ++frames_;
}

MetricReport MetricAccumulator::report(bool sparse_gt) const {
  if (tp_ + fp_ + fn_ + tn_ == 0) {
    throw Error(ErrorKind::kEmptyVisibility, "no visible pixel was accumulated");
  }
  MetricReport r;
  r.tp = tp_;
  r.fp = fp_;
  r.fn = fn_;
  r.tn = tn_;
  r.frames = frames_;
  const auto ratio = [](std::uint64_t num, std::uint64_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  };
  r.iou = ratio(tp_, tp_ + fp_ + fn_);
  r.recall = ratio(tp_, tp_ + fn_);
  r.precision = ratio(tp_, tp_ + fp_);
  r.fn_rate = ratio(fn_, fn_ + tn_);
  r.precision_applicable = !sparse_gt;
  return r;
}

BinaryMask binarize(const Grid<double>& prob, double threshold) {
  BinaryMask out(prob.width(), prob.height(), 0);
  for (int y = 0; y < prob.height(); ++y) {
    for (int x = 0; x < prob.width(); ++x) {
      out(x, y) = prob(x, y) >= threshold ? 1 : 0;
    }
  }
  return out;
}

MetricReport masked_metrics(const BinaryMask& pred, const BinaryMask& gt, const BinaryMask& vis,
                            bool sparse_gt) {
  MetricAccumulator acc;
  acc.add(pred, gt, vis);
  return acc.report(sparse_gt);
}

SweepResult threshold_sweep(std::span<const Grid<double>> probs, std::span<const BinaryMask> gts,
                            std::span<const BinaryMask> vis, std::span<const double> thresholds) {
  if (probs.empty() || probs.size() != gts.size() || probs.size() != vis.size() ||
      thresholds.empty()) {
    throw Error(ErrorKind::kInvalidInput, "threshold_sweep needs aligned non-empty inputs");
  }
  std::vector<double> ordered(thresholds.begin(), thresholds.end());
  std::sort(ordered.begin(), ordered.end());  // ties resolve toward the lower threshold
  SweepResult best;
  bool first = true;
  for (const double threshold : ordered) {
    MetricAccumulator acc;
    for (std::size_t f = 0; f < probs.size(); ++f) {
      acc.add(binarize(probs[f], threshold), gts[f], vis[f]);
    }
    const MetricReport report = acc.report();
    if (first || report.iou > best.report.iou) {
      best.threshold = threshold;
      best.report = report;
      first = false;
    }
  }
  return best;
}

BinaryMask detection2d_baseline(const SemanticMap& sem, const LabelConfig& cfg) {
  BinaryMask out(sem.width(), sem.height(), 0);
  for (int y = 0; y < sem.height(); ++y) {
    for (int x = 0; x < sem.width(); ++x) {
      const int id = sem(x, y);
      if (!cfg.known(id)) {
        throw Error(ErrorKind::kInvalidInput,
                    "semantic label " + std::to_string(id) + " is not in the label table");
      }
      out(x, y) = cfg.obstacle_ids.count(id) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace blindspot
