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

#include "blindspot/raster.hpp"
#include "blindspot/sequence.hpp"

namespace blindspot {

/// Visualization: blind spots tinted red at 50% opacity, pixels outside the
/// visibility mask darkened. Deterministic for fixed inputs.
RgbImage render_overlay(const RgbImage& base, const BinaryMask& omega, const BinaryMask& vis);

/// Grayscale fallback base when a sequence has no RGB channel.
RgbImage gray_base_from_semantic(const SemanticMap& sem);

}  // namespace blindspot
