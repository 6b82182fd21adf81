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

#include "blindspot/losses.hpp"

#include <algorithm>
#include <cmath>

namespace blindspot {

Eigen::VectorXd FeatureGrid::cell_vector(int i) const {
  Eigen::VectorXd v(channels);
  const int x = i % width;
  const int y = i / width;
  for (int c = 0; c < channels; ++c) v[c] = at(x, y, c);
  return v;
}

void LossConfig::check() const {
  if (lambda < 0.0) throw Error(ErrorKind::kInvalidInput, "lambda must be non-negative");
  if (patch_w < 1 || patch_h < 1) {
    throw Error(ErrorKind::kInvalidInput, "patch grid must be at least 1x1");
  }
  if (!(epsilon_clip > 0.0 && epsilon_clip < 0.5)) {
    throw Error(ErrorKind::kInvalidInput, "epsilon_clip must lie in (0, 0.5)");
  }
}

FeatureGrid patch_pool(const FeatureGrid& feat, int patch_w, int patch_h) {
  if (patch_w < 1 || patch_h < 1 || patch_w > feat.width || patch_h > feat.height) {
    throw Error(ErrorKind::kInvalidInput, "patch grid exceeds the feature raster");
  }
  FeatureGrid out(patch_w, patch_h, feat.channels);
  for (int py = 0; py < patch_h; ++py) {
    const int y0 = py * feat.height / patch_h;
    const int y1 = (py + 1) * feat.height / patch_h;
    for (int px = 0; px < patch_w; ++px) {
      const int x0 = px * feat.width / patch_w;
      const int x1 = (px + 1) * feat.width / patch_w;
      const double area = static_cast<double>(x1 - x0) * (y1 - y0);
      for (int c = 0; c < feat.channels; ++c) {
        double sum = 0.0;
        for (int y = y0; y < y1; ++y) {
          for (int x = x0; x < x1; ++x) sum += feat.at(x, y, c);
        }
        out.at(px, py, c) = sum / area;
      }
    }
  }
  return out;
}

SimilarityMatrix pairwise_similarity(const FeatureGrid& patches) {
  const int n = patches.cells();
  SimilarityMatrix result;
  result.a = Eigen::MatrixXd::Zero(n, n);

  std::vector<Eigen::VectorXd> vectors(n);
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) {
    vectors[i] = patches.cell_vector(i);
    norms[i] = vectors[i].norm();
    if (norms[i] == 0.0) result.degenerate = true;
  }

  for (int i = 0; i < n; ++i) {
    result.a(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double value = 0.0;
      if (norms[i] > 0.0 && norms[j] > 0.0) {
        value = vectors[i].dot(vectors[j]) / (norms[i] * norms[j]);
        value = std::clamp(value, -1.0, 1.0);
      }
      result.a(i, j) = value;
      result.a(j, i) = value;
    }
  }
  return result;
}

double kd_loss(const Eigen::MatrixXd& teacher, const Eigen::MatrixXd& student) {
  if (teacher.rows() != student.rows() || teacher.cols() != student.cols()) {
    throw Error(ErrorKind::kInvalidInput, "similarity matrices differ in size");
  }
  const double n = static_cast<double>(teacher.rows());
  return (student - teacher).squaredNorm() / (n * n);
}

KdLossResult kd_loss_with_grad(const FeatureGrid& teacher_patches,
                               const FeatureGrid& student_patches) {
  if (teacher_patches.width != student_patches.width ||
      teacher_patches.height != student_patches.height) {
    throw Error(ErrorKind::kInvalidInput, "patch grids differ in size");
  }
  const SimilarityMatrix teacher = pairwise_similarity(teacher_patches);
  const SimilarityMatrix student = pairwise_similarity(student_patches);
  const int n = student_patches.cells();

  KdLossResult result;
  result.loss = kd_loss(teacher.a, student.a);
  result.grad = FeatureGrid(student_patches.width, student_patches.height,
                            student_patches.channels);

  std::vector<Eigen::VectorXd> f(n);
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) {
    f[i] = student_patches.cell_vector(i);
    norms[i] = f[i].norm();
  }

  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  for (int k = 0; k < n; ++k) {
    if (norms[k] == 0.0) continue;  // subgradient 0 for degenerate patches
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(student_patches.channels);
    for (int j = 0; j < n; ++j) {
      if (norms[j] == 0.0) continue;
      const double diff = student.a(k, j) - teacher.a(k, j);
      if (diff == 0.0) continue;
      // d a_kj / d f_k; both (k,j) and (j,k) carry the same term.
      const Eigen::VectorXd da =
          f[j] / (norms[k] * norms[j]) - student.a(k, j) * f[k] / (norms[k] * norms[k]);
      grad += 4.0 * inv_n2 * diff * da;
    }
    const int x = k % student_patches.width;
    const int y = k / student_patches.width;
    for (int c = 0; c < student_patches.channels; ++c) result.grad.at(x, y, c) = grad[c];
  }
  return result;
}

BceLossResult bce_loss(const BinaryMask& omega, const Grid<double>& prob,
                       const BinaryMask& visibility, double epsilon_clip) {
  if (!omega.same_size(prob) || !omega.same_size(visibility)) {
    throw Error(ErrorKind::kRasterMismatch, "bce_loss inputs disagree on raster size");
  }
  if (!(epsilon_clip > 0.0 && epsilon_clip < 0.5)) {
    throw Error(ErrorKind::kInvalidInput, "epsilon_clip must lie in (0, 0.5)");
  }
  const std::size_t visible = count_nonzero(visibility);
  if (visible == 0) {
    throw Error(ErrorKind::kEmptyVisibility, "bce_loss needs a non-empty visibility mask");
  }

  BceLossResult result;
  result.grad = Grid<double>(omega.width(), omega.height(), 0.0);
  double sum = 0.0;
  for (int y = 0; y < omega.height(); ++y) {
    for (int x = 0; x < omega.width(); ++x) {
      if (!visibility(x, y)) continue;
      const double raw = prob(x, y);
      const double b = std::clamp(raw, epsilon_clip, 1.0 - epsilon_clip);
      const double w = omega(x, y) ? 1.0 : 0.0;
      sum += w * std::log(b) + (1.0 - w) * std::log(1.0 - b);
      // Clamped pixels sit on a constant branch of the loss.
      if (raw >= epsilon_clip && raw <= 1.0 - epsilon_clip) {
        result.grad(x, y) = -(w / b - (1.0 - w) / (1.0 - b)) / static_cast<double>(visible);
      }
    }
  }
  result.loss = -sum / static_cast<double>(visible);
  return result;
}

double total_loss(double bce, double kd, double lambda) {
  if (!std::isfinite(bce) || !std::isfinite(kd) || bce < 0.0 || kd < 0.0) {
    throw Error(ErrorKind::kInvalidInput, "loss terms must be finite and non-negative");
  }
  return bce + lambda * kd;
}

}  // namespace blindspot
