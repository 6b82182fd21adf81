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

#include "blindspot/camera.hpp"

#include "blindspot/error.hpp"

namespace blindspot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid input";
    case ErrorKind::kRasterMismatch: return "raster mismatch";
    case ErrorKind::kWindowUnderflow: return "window underflow";
    case ErrorKind::kDegenerateFit: return "degenerate fit";
    case ErrorKind::kEmptyVisibility: return "empty visibility";
    case ErrorKind::kMissingFile: return "missing file";
    case ErrorKind::kCountMismatch: return "count mismatch";
    case ErrorKind::kMalformedLine: return "malformed line";
    case ErrorKind::kInvariantViolation: return "invariant violation";
    case ErrorKind::kIoFailure: return "io failure";
  }
  return "error";
}

void CameraIntrinsics::check() const {
  if (fx <= 0.0 || fy <= 0.0) {
    throw Error(ErrorKind::kInvariantViolation, "focal lengths must be positive");
  }
  if (width <= 0 || height <= 0) {
    throw Error(ErrorKind::kInvariantViolation, "raster size must be positive");
  }
  if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height) {
    throw Error(ErrorKind::kInvariantViolation, "principal point must lie inside the raster");
  }
}

}  // namespace blindspot
