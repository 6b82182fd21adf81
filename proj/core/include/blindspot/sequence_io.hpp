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

#include <filesystem>

#include "blindspot/pipeline.hpp"
#include "blindspot/sequence.hpp"

namespace blindspot {

// Sequence directory layout:
//   intrinsics.txt   one line: fx fy cx cy width height
//   poses.txt        one line per frame: row-major 3x4 camera-to-world matrix
//   labels.cfg       key = value lists: traversable_ids, sky_ids,
//                    obstacle_ids, optional other_ids
//   fps.txt          optional single number, defaults to 5
//   depth/%06d.png   16-bit depth PNGs
//   semantic/%06d.png 8-bit class ID PNGs
//   rgb/%06d.png     optional 8-bit RGB PNGs

/// Loads and validates a sequence directory. Errors carry the offending file
/// (and line, where applicable) and a distinct kind per failure mode.
Sequence load_sequence(const std::filesystem::path& dir);

/// Writes the full directory layout above.
void save_sequence(const Sequence& seq, const std::filesystem::path& dir);

/// Writes blindspot/%06d.png and visibility/%06d.png for one frame; with
/// debug_rasters also aggregated_surface/ and aggregated_depth/.
void save_outputs(const BlindSpotResult& result, const std::filesystem::path& dir, int frame,
                  bool debug_rasters = false);

}  // namespace blindspot
