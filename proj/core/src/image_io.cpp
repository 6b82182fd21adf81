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

#include "blindspot/image_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#include <png.h>

namespace blindspot {

namespace {

int endian_transform() {
  return std::endian::native == std::endian::little ? PNG_TRANSFORM_SWAP_ENDIAN
                                                    : PNG_TRANSFORM_IDENTITY;
}

struct PngReader {
  FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriter {
  FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

struct RawImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bytes;  // rows packed back to back
};

RawImage read_png_raw(const std::filesystem::path& path, int expected_color_type,
                      int expected_bit_depth) {
  PngReader r;
  r.fp = std::fopen(path.string().c_str(), "rb");
  if (!r.fp) {
    throw Error(ErrorKind::kMissingFile, "cannot open " + path.string());
  }
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png || !(r.info = png_create_info_struct(r.png))) {
    throw Error(ErrorKind::kIoFailure, "png allocation failed for " + path.string());
  }
  if (setjmp(png_jmpbuf(r.png))) {
    throw Error(ErrorKind::kIoFailure, "failed to decode " + path.string());
  }
  png_init_io(r.png, r.fp);
  png_read_png(r.png, r.info, endian_transform(), nullptr);

  RawImage out;
  out.width = static_cast<int>(png_get_image_width(r.png, r.info));
  out.height = static_cast<int>(png_get_image_height(r.png, r.info));
  if (png_get_color_type(r.png, r.info) != expected_color_type ||
      png_get_bit_depth(r.png, r.info) != expected_bit_depth) {
    throw Error(ErrorKind::kIoFailure, path.string() + " has an unexpected pixel format");
  }
  const std::size_t row_bytes = png_get_rowbytes(r.png, r.info);
  png_bytepp rows = png_get_rows(r.png, r.info);
  out.bytes.resize(row_bytes * out.height);
  for (int y = 0; y < out.height; ++y) {
    std::memcpy(out.bytes.data() + row_bytes * y, rows[y], row_bytes);
  }
  return out;
}

void write_png_raw(const std::filesystem::path& path, int width, int height, int color_type,
                   int bit_depth, const std::uint8_t* bytes) {
  PngWriter w;
  w.fp = std::fopen(path.string().c_str(), "wb");
  if (!w.fp) {
    throw Error(ErrorKind::kIoFailure, "cannot write " + path.string());
  }
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!w.png || !(w.info = png_create_info_struct(w.png))) {
    throw Error(ErrorKind::kIoFailure, "png allocation failed for " + path.string());
  }

  const std::size_t bytes_per_px = (color_type == PNG_COLOR_TYPE_RGB ? 3u : 1u) *
                                   (bit_depth == 16 ? 2u : 1u);
  const std::size_t row_bytes = bytes_per_px * static_cast<std::size_t>(width);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(bytes + row_bytes * y);
  }

  if (setjmp(png_jmpbuf(w.png))) {
    throw Error(ErrorKind::kIoFailure, "failed to encode " + path.string());
  }
  png_init_io(w.png, w.fp);
  png_set_IHDR(w.png, w.info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_rows(w.png, w.info, rows.data());
  png_write_png(w.png, w.info, endian_transform(), nullptr);
}

}  // namespace

Grid<std::uint8_t> read_png_gray8(const std::filesystem::path& path) {
  const RawImage raw = read_png_raw(path, PNG_COLOR_TYPE_GRAY, 8);
  Grid<std::uint8_t> out(raw.width, raw.height);
  std::memcpy(out.data().data(), raw.bytes.data(), raw.bytes.size());
  return out;
}

void write_png_gray8(const std::filesystem::path& path, const Grid<std::uint8_t>& img) {
  write_png_raw(path, img.width(), img.height(), PNG_COLOR_TYPE_GRAY, 8, img.data().data());
}

Grid<std::uint16_t> read_png_gray16(const std::filesystem::path& path) {
  const RawImage raw = read_png_raw(path, PNG_COLOR_TYPE_GRAY, 16);
  Grid<std::uint16_t> out(raw.width, raw.height);
  std::memcpy(out.data().data(), raw.bytes.data(), raw.bytes.size());
  return out;
}

void write_png_gray16(const std::filesystem::path& path, const Grid<std::uint16_t>& img) {
  write_png_raw(path, img.width(), img.height(), PNG_COLOR_TYPE_GRAY, 16,
                reinterpret_cast<const std::uint8_t*>(img.data().data()));
}

RgbImage read_png_rgb8(const std::filesystem::path& path) {
  const RawImage raw = read_png_raw(path, PNG_COLOR_TYPE_RGB, 8);
  RgbImage out(raw.width, raw.height);
  std::memcpy(out.data.data(), raw.bytes.data(), raw.bytes.size());
  return out;
}

void write_png_rgb8(const std::filesystem::path& path, const RgbImage& img) {
  write_png_raw(path, img.width, img.height, PNG_COLOR_TYPE_RGB, 8, img.data.data());
}

BinaryMask mask_from_png(const std::filesystem::path& path) {
  Grid<std::uint8_t> img = read_png_gray8(path);
  for (auto& v : img.data()) v = v ? 1 : 0;
  return img;
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
  Grid<std::uint8_t> img(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.data().size(); ++i) {
    img.data()[i] = mask.data()[i] ? 255 : 0;
  }
  write_png_gray8(path, img);
}

DepthMap depth_from_png(const std::filesystem::path& path) {
  const Grid<std::uint16_t> raw = read_png_gray16(path);
  DepthMap out(raw.width(), raw.height());
  for (int y = 0; y < raw.height(); ++y) {
    for (int x = 0; x < raw.width(); ++x) {
      if (raw(x, y) != 0) {
        out.set(x, y, static_cast<float>(raw(x, y) / kDepthPngScale));
      }
    }
  }
  return out;
}

void write_depth_png(const std::filesystem::path& path, const DepthMap& depth) {
  Grid<std::uint16_t> raw(depth.width(), depth.height(), 0);
  for (int y = 0; y < depth.height(); ++y) {
    for (int x = 0; x < depth.width(); ++x) {
      if (!depth.valid_at(x, y)) continue;
      const double scaled = std::round(depth.values(x, y) * kDepthPngScale);
      const double clamped = std::min(scaled, 65535.0);
      // Valid depths never encode as 0 (reserved for "no depth").
      raw(x, y) = static_cast<std::uint16_t>(std::max(clamped, 1.0));
    }
  }
  write_png_gray16(path, raw);
}

Grid<double> prob_from_png(const std::filesystem::path& path) {
  const Grid<std::uint8_t> raw = read_png_gray8(path);
  Grid<double> out(raw.width(), raw.height(), 0.0);
  for (int y = 0; y < raw.height(); ++y) {
    for (int x = 0; x < raw.width(); ++x) {
      out(x, y) = raw(x, y) / 255.0;
    }
  }
  return out;
}

}  // namespace blindspot
