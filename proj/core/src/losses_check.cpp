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
#include <random>

#include "blindspot/losses.hpp"

namespace blindspot {

namespace {

constexpr double kFdStep = 1e-4;
constexpr double kRelTol = 1e-5;
constexpr double kAbsTol = 1e-9;

bool gradients_agree(double analytic, double numeric) {
  return std::abs(analytic - numeric) <= kAbsTol + kRelTol * std::abs(numeric);
}

FeatureGrid random_patches(std::mt19937& rng, int w, int h, int c) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FeatureGrid grid(w, h, c);
  for (int i = 0; i < w * h; ++i) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int ch = 0; ch < c; ++ch) {
        const double v = dist(rng);
        grid.at(i % w, i / w, ch) = v;
        norm2 += v * v;
      }
    } while (norm2 < 0.01);  // keep patches away from the zero-norm degeneracy
  }
  return grid;
}

bool check_kd_gradient(std::mt19937& rng) {
  std::uniform_int_distribution<int> wdist(2, 3), hdist(1, 3), cdist(2, 6);
  const int w = wdist(rng);
  const int h = hdist(rng);
  const int c = cdist(rng);
  const FeatureGrid teacher = random_patches(rng, w, h, c);
  FeatureGrid student = random_patches(rng, w, h, c);

  const KdLossResult res = kd_loss_with_grad(teacher, student);
  for (std::size_t k = 0; k < student.values.size(); ++k) {
    const double saved = student.values[k];
    student.values[k] = saved + kFdStep;
    const double up = kd_loss_with_grad(teacher, student).loss;
    student.values[k] = saved - kFdStep;
    const double down = kd_loss_with_grad(teacher, student).loss;
    student.values[k] = saved;
    if (!gradients_agree(res.grad.values[k], (up - down) / (2.0 * kFdStep))) return false;
  }
  return true;
}

bool check_bce_gradient(std::mt19937& rng) {
  const int w = 16, h = 16;
  std::uniform_real_distribution<double> pdist(0.05, 0.95);
  std::bernoulli_distribution bit(0.5);
  BinaryMask omega(w, h, 0), vis(w, h, 0);
  Grid<double> prob(w, h, 0.5);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      omega(x, y) = bit(rng) ? 1 : 0;
      vis(x, y) = bit(rng) ? 1 : 0;
      prob(x, y) = pdist(rng);
    }
  }
  vis(0, 0) = 1;

  const BceLossResult res = bce_loss(omega, prob, vis);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double saved = prob(x, y);
      prob(x, y) = saved + kFdStep;
      const double up = bce_loss(omega, prob, vis).loss;
      prob(x, y) = saved - kFdStep;
      const double down = bce_loss(omega, prob, vis).loss;
      prob(x, y) = saved;
      if (!gradients_agree(res.grad(x, y), (up - down) / (2.0 * kFdStep))) return false;
    }
  }
  return true;
}

}  // namespace

bool run_losses_selfcheck(std::ostream& out, int instances, unsigned seed) {
  bool all_ok = true;
  auto report = [&](const char* name, bool ok) {
    out << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    all_ok = all_ok && ok;
  };

  {
    // Orthogonal teacher pair vs collinear student pair.
    FeatureGrid teacher(2, 1, 2), student(2, 1, 2);
    teacher.at(0, 0, 0) = 1.0;
    teacher.at(1, 0, 1) = 1.0;
    student.at(0, 0, 0) = 1.0;
    student.at(1, 0, 0) = 1.0;
    const double loss =
        kd_loss(pairwise_similarity(teacher).a, pairwise_similarity(student).a);
    report("kd two-patch case equals 0.5", std::abs(loss - 0.5) < 1e-15);
  }
  {
    BinaryMask omega(1, 1, 1), vis(1, 1, 1);
    Grid<double> prob(1, 1, 0.5);
    const double loss = bce_loss(omega, prob, vis).loss;
    report("bce single-pixel case equals ln 2", std::abs(loss - std::log(2.0)) < 1e-12);
  }
  {
    std::mt19937 rng(seed);
    FeatureGrid teacher = random_patches(rng, 3, 2, 4);
    FeatureGrid student = teacher;
    std::uniform_real_distribution<double> sdist(0.1, 5.0);
    for (int i = 0; i < student.cells(); ++i) {
      const double s = sdist(rng);
      for (int c = 0; c < student.channels; ++c) {
        student.at(i % student.width, i / student.width, c) *= s;
      }
    }
    const double loss =
        kd_loss(pairwise_similarity(teacher).a, pairwise_similarity(student).a);
    report("kd invariant under per-patch positive rescaling", loss == 0.0);
  }
  {
    std::mt19937 rng(seed + 1);
    bool ok = true;
    for (int i = 0; i < instances && ok; ++i) ok = check_kd_gradient(rng);
    report("kd analytic gradient matches finite differences", ok);
  }
  {
    std::mt19937 rng(seed + 2);
    bool ok = true;
    for (int i = 0; i < instances && ok; ++i) ok = check_bce_gradient(rng);
    report("bce analytic gradient matches finite differences", ok);
  }
  return all_ok;
}

}  // namespace blindspot
