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

#include "blindspot/overlay.hpp"

namespace blindspot {

RgbImage render_overlay(const RgbImage& base, const BinaryMask& omega, const BinaryMask& vis) {
  if (base.width != omega.width() || base.height != omega.height() || !omega.same_size(vis)) {
    throw Error(ErrorKind::kRasterMismatch, "overlay inputs disagree on raster size");
  }
  RgbImage out = base;
  for (int y = 0; y < base.height; ++y) {
    for (int x = 0; x < base.width; ++x) {
      if (!vis(x, y)) {
        for (int c = 0; c < 3; ++c) out.at(x, y, c) = base.at(x, y, c) / 2;
      }
      if (omega(x, y)) {
        out.at(x, y, 0) = static_cast<std::uint8_t>((out.at(x, y, 0) + 255) / 2);
        out.at(x, y, 1) = out.at(x, y, 1) / 2;
        out.at(x, y, 2) = out.at(x, y, 2) / 2;
      }
    }
  }
  return out;
}

RgbImage gray_base_from_semantic(const SemanticMap& sem) {
  RgbImage out(sem.width(), sem.height());
  for (int y = 0; y < sem.height(); ++y) {
    for (int x = 0; x < sem.width(); ++x) {
      // Spread class IDs over the gray range so neighboring IDs stay distinct.
      const std::uint8_t g = static_cast<std::uint8_t>((sem(x, y) * 53) % 256);
      out.at(x, y, 0) = g;
      out.at(x, y, 1) = g;
      out.at(x, y, 2) = g;
    }
  }
  return out;
}

}  // namespace blindspot
