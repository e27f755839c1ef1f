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

#include "rdct/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rdct {

namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const char* what) {
  skip_separators(in);
  long long v = -1;
  if (!(in >> v)) throw std::runtime_error(std::string("pgm: missing ") + what);
  if (v <= 0 || v > (1 << 24)) throw std::runtime_error(std::string("pgm: bad ") + what);
  return static_cast<int>(v);
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : GrayImage(width, height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                              std::max(height, 0),
                                          fill)) {}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0 ||
      pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
  }
}

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    throw std::runtime_error("pgm: bad magic (expected P2 or P5)");
  }
  const bool binary = magic[1] == '5';
  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (maxval > 255) throw std::runtime_error("pgm: maxval > 255 not supported");

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(in.get())) throw std::runtime_error("pgm: malformed header");
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(pixels.size())) {
      throw std::runtime_error("pgm: truncated payload");
    }
  } else {
    for (auto& p : pixels) {
      skip_separators(in);
      int v = -1;
      if (!(in >> v)) throw std::runtime_error("pgm: truncated payload");
      if (v < 0 || v > maxval) throw std::runtime_error("pgm: sample exceeds maxval");
      p = static_cast<std::uint8_t>(v);
    }
  }
  if (binary && maxval < 255 &&
      std::any_of(pixels.begin(), pixels.end(), [&](std::uint8_t p) { return p > maxval; })) {
    throw std::runtime_error("pgm: sample exceeds maxval");
  }
  return GrayImage(width, height, std::move(pixels));
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_pgm(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_pgm(std::ostream& out, const GrayImage& img) {
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  const auto px = img.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_pgm(out, img);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void require_block_aligned(const GrayImage& img) {
  if (img.width() % kBlockSize || img.height() % kBlockSize || img.width() == 0 ||
      img.height() == 0) {
    throw std::invalid_argument("image dimensions " + std::to_string(img.width()) + "x" +
                                std::to_string(img.height()) +
                                " are not positive multiples of 8");
  }
}

std::vector<PlacedBlock> blocks(const GrayImage& img) {
  require_block_aligned(img);
  const int rows = img.height() / kBlockSize;
  const int cols = img.width() / kBlockSize;
  std::vector<PlacedBlock> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int br = 0; br < rows; ++br) {
    for (int bc = 0; bc < cols; ++bc) {
      PlacedBlock b{br, bc, Block8()};
      for (int i = 0; i < kBlockSize; ++i) {
        for (int j = 0; j < kBlockSize; ++j) {
          b.samples(i, j) = img(br * kBlockSize + i, bc * kBlockSize + j);
        }
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

Plane assemble(int width, int height, std::span<const PlacedBlock> parts) {
  Plane plane = Plane::Zero(height, width);
  for (const auto& b : parts) {
    plane.block<kBlockSize, kBlockSize>(b.block_row * kBlockSize, b.block_col * kBlockSize) =
        b.samples;
  }
  return plane;
}

GrayImage quantize(const Plane& plane) {
  GrayImage img(static_cast<int>(plane.cols()), static_cast<int>(plane.rows()));
  for (Eigen::Index i = 0; i < plane.rows(); ++i) {
    for (Eigen::Index j = 0; j < plane.cols(); ++j) {
      const double v = std::clamp(std::round(plane(i, j)), 0.0, 255.0);
      img(static_cast<int>(i), static_cast<int>(j)) = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

Plane to_plane(const GrayImage& img) {
  Plane plane(img.height(), img.width());
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) plane(i, j) = img(i, j);
  }
  return plane;
}

}  // namespace rdct
