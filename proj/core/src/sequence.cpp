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

#include "blindspot/sequence.hpp"

#include <string>

namespace blindspot {

void LabelConfig::check() const {
  if (traversable_ids.empty() || sky_ids.empty()) {
    throw Error(ErrorKind::kInvariantViolation,
                "label config needs non-empty traversable and sky groups");
  }
  for (int id : traversable_ids) {
    if (sky_ids.count(id)) {
      throw Error(ErrorKind::kInvariantViolation,
                  "label " + std::to_string(id) + " is both traversable and sky");
    }
  }
}

void Sequence::check() const {
  intrinsics.check();
  labels.check();
  if (fps <= 0.0) {
    throw Error(ErrorKind::kInvariantViolation, "sequence fps must be positive");
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const FrameBundle& f = frames[i];
    const std::string where = "frame " + std::to_string(i);
    if (f.depth.width() != intrinsics.width || f.depth.height() != intrinsics.height ||
        !f.depth.values.same_size(f.semantic)) {
      throw Error(ErrorKind::kRasterMismatch, where + " disagrees with the intrinsics raster");
    }
    if (f.rgb && (f.rgb->width != intrinsics.width || f.rgb->height != intrinsics.height)) {
      throw Error(ErrorKind::kRasterMismatch, where + " rgb disagrees with the intrinsics raster");
    }
    f.pose.check();
    f.depth.check();
  }
}

}  // namespace blindspot
