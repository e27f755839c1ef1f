// Copyright 2026 The rdct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rdct/types.hpp"

namespace rdct {

/// 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t operator()(int row, int col) const { return pixels_[index(row, col)]; }
  std::uint8_t& operator()(int row, int col) { return pixels_[index(row, col)]; }
  std::span<const std::uint8_t> pixels() const { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Reads P2 or P5 with maxval <= 255. Throws std::runtime_error on bad
/// magic, unsupported maxval or truncated payload.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::filesystem::path& path);

/// Writes canonical P5: "P5\n<w> <h>\n255\n" followed by raw bytes.
void write_pgm(std::ostream& out, const GrayImage& img);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

struct PlacedBlock {
  int block_row = 0;  // in units of 8 pixels
  int block_col = 0;
  Block8 samples;
};

/// Row-major partition into 8x8 blocks. Throws std::invalid_argument unless
/// both dimensions are multiples of 8.
std::vector<PlacedBlock> blocks(const GrayImage& img);

/// Writes blocks back into a width x height plane.
Plane assemble(int width, int height, std::span<const PlacedBlock> parts);

/// Round half away from zero, then clamp to [0, 255].
GrayImage quantize(const Plane& plane);

Plane to_plane(const GrayImage& img);

void require_block_aligned(const GrayImage& img);

}  // namespace rdct
