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

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "blindspot/raster.hpp"

namespace blindspot {

/// Dense W x H x C feature raster (channel-last storage).
struct FeatureGrid {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<double> values;

  FeatureGrid() = default;
  FeatureGrid(int w, int h, int c)
      : width(w), height(h), channels(c),
        values(static_cast<std::size_t>(w) * h * c, 0.0) {}

  double& at(int x, int y, int c) {
    return values[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int x, int y, int c) const {
    return values[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  int cells() const { return width * height; }

  /// Channel vector of cell i in row-major cell order.
  Eigen::VectorXd cell_vector(int i) const;
};

struct LossConfig {
  double lambda = 1.0;          // weight of the distillation term
  int patch_w = 4;              // patch grid used for pairwise similarity
  int patch_h = 4;
  double epsilon_clip = 1e-7;   // BCE probability clamp

  void check() const;
};

/// Partitions the raster into patch_w x patch_h near-equal rectangles and
/// averages each channel inside every rectangle.
FeatureGrid patch_pool(const FeatureGrid& feat, int patch_w, int patch_h);

/// Pairwise cosine similarities between patch vectors. Zero-norm patches get
/// similarity 0 off-diagonal and 1 on the diagonal and raise `degenerate`.
struct SimilarityMatrix {
  Eigen::MatrixXd a;
  bool degenerate = false;
};
SimilarityMatrix pairwise_similarity(const FeatureGrid& patches);

/// Mean squared difference between two similarity matrices over all ordered
/// pairs, diagonal included.
double kd_loss(const Eigen::MatrixXd& teacher, const Eigen::MatrixXd& student);

/// Same loss evaluated from patch vectors, plus its gradient with respect to
/// every student patch vector.
struct KdLossResult {
  double loss = 0.0;
  FeatureGrid grad;  // same shape as the student patches
};
KdLossResult kd_loss_with_grad(const FeatureGrid& teacher_patches,
                               const FeatureGrid& student_patches);

/// Masked binary cross entropy, averaged over visible pixels, with the
/// probabilities clamped to [eps, 1-eps]. The gradient is zero outside the
/// visibility mask. Throws kEmptyVisibility when no pixel is visible.
struct BceLossResult {
  double loss = 0.0;
  Grid<double> grad;
};
BceLossResult bce_loss(const BinaryMask& omega, const Grid<double>& prob,
                       const BinaryMask& visibility, double epsilon_clip = 1e-7);

/// Weighted total: bce + lambda * kd.
double total_loss(double bce, double kd, double lambda);

/// Self-check used by the CLI: evaluates the closed-form cases and verifies
/// the analytic gradients against central finite differences on random
/// instances. Prints one line per check; returns false if anything fails.
bool run_losses_selfcheck(std::ostream& out, int instances = 20, unsigned seed = 7);

}  // namespace blindspot
