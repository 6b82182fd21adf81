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

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "blindspot/error.hpp"

namespace blindspot {

/// Dense row-major raster. Pixel (x, y) has x growing rightward and y growing
/// downward, origin at the top-left pixel center.
template <typename T>
class Grid {
 public:
  Grid() = default;

  Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw Error(ErrorKind::kInvalidInput, "grid dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  bool contains(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

  template <typename U>
  bool same_size(const Grid<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  T& operator()(int x, int y) {
    assert(contains(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& operator()(int x, int y) const {
    assert(contains(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  void fill(T value) { data_.assign(data_.size(), value); }

  bool operator==(const Grid& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

/// Per-pixel {0,1} mask.
using BinaryMask = Grid<std::uint8_t>;

/// Per-pixel semantic class IDs.
using SemanticMap = Grid<std::uint8_t>;

/// Metric depth raster with an explicit validity channel (0 = no depth).
/// Valid entries are finite and strictly positive.
struct DepthMap {
  Grid<float> values;
  Grid<std::uint8_t> validity;

  DepthMap() = default;
  DepthMap(int width, int height)
      : values(width, height, 0.0f), validity(width, height, std::uint8_t{0}) {}

  int width() const { return values.width(); }
  int height() const { return values.height(); }

  bool valid_at(int x, int y) const { return validity(x, y) != 0; }

  void set(int x, int y, float meters) {
    values(x, y) = meters;
    validity(x, y) = 1;
  }

  void invalidate(int x, int y) {
    values(x, y) = 0.0f;
    validity(x, y) = 0;
  }

  /// Throws kInvariantViolation if any valid entry is non-finite or <= 0.
  void check() const {
    for (int y = 0; y < height(); ++y) {
      for (int x = 0; x < width(); ++x) {
        if (validity(x, y) && (!std::isfinite(values(x, y)) || values(x, y) <= 0.0f)) {
          throw Error(ErrorKind::kInvariantViolation,
                      "depth map holds a non-positive or non-finite valid value");
        }
      }
    }
  }

  bool operator==(const DepthMap& other) const = default;
};

inline std::size_t count_nonzero(const BinaryMask& mask) {
  std::size_t n = 0;
  for (auto v : mask.data()) n += (v != 0);
  return n;
}

inline void require_binary(const BinaryMask& mask, const char* what) {
  for (auto v : mask.data()) {
    if (v > 1) throw Error(ErrorKind::kInvalidInput, std::string(what) + " is not a {0,1} mask");
  }
}

}  // namespace blindspot
