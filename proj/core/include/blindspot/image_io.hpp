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

#include "blindspot/raster.hpp"
#include "blindspot/sequence.hpp"

namespace blindspot {

// PNG codecs. Masks are 8-bit 0/255, semantics are raw 8-bit class IDs,
// depth is 16-bit with meters = raw / 256 and raw 0 meaning "no depth".

Grid<std::uint8_t> read_png_gray8(const std::filesystem::path& path);
void write_png_gray8(const std::filesystem::path& path, const Grid<std::uint8_t>& img);

Grid<std::uint16_t> read_png_gray16(const std::filesystem::path& path);
void write_png_gray16(const std::filesystem::path& path, const Grid<std::uint16_t>& img);

RgbImage read_png_rgb8(const std::filesystem::path& path);
void write_png_rgb8(const std::filesystem::path& path, const RgbImage& img);

/// 0/255 image -> {0,1} mask. Any nonzero byte counts as 1.
BinaryMask mask_from_png(const std::filesystem::path& path);
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

inline constexpr double kDepthPngScale = 256.0;

DepthMap depth_from_png(const std::filesystem::path& path);
void write_depth_png(const std::filesystem::path& path, const DepthMap& depth);

/// 8-bit probability raster, prob = raw / 255.
Grid<double> prob_from_png(const std::filesystem::path& path);

}  // namespace blindspot
