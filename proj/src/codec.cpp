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

#include "rdct/codec.hpp"

#include <stdexcept>
#include <string>

namespace rdct {

namespace {

ZigzagOrder build_zigzag() {
  // Walk anti-diagonals d = row + col; even d runs bottom-left to
  // top-right, odd d top-right to bottom-left.
  ZigzagOrder z;
  int k = 0;
  for (int d = 0; d < 15; ++d) {
    const int lo = d < 8 ? 0 : d - 7;
    const int hi = d < 8 ? d : 7;
    for (int i = lo; i <= hi; ++i) {
      const int row = d % 2 == 0 ? d - i : i;
      z.positions[k++] = {row, d - row};
    }
  }
  return z;
}

std::array<Block8, 65> build_masks() {
  std::array<Block8, 65> masks;
  const auto& z = zigzag_order();
  masks[0] = Block8::Zero();
  for (int r = 1; r <= 64; ++r) {
    masks[r] = masks[r - 1];
    const auto [row, col] = z.positions[r - 1];
    masks[r](row, col) = 1.0;
  }
  return masks;
}

const Block8& retention_mask(int r) {
  static const std::array<Block8, 65> masks = build_masks();
  return masks[r];
}

}  // namespace

int ZigzagOrder::rank(int row, int col) const {
  for (int k = 0; k < 64; ++k) {
    if (positions[k] == std::pair{row, col}) return k;
  }
  throw std::out_of_range("zigzag: position outside 8x8");
}

const ZigzagOrder& zigzag_order() {
  static const ZigzagOrder z = build_zigzag();
  return z;
}

RetentionPolicy::RetentionPolicy(int r) : r_(r) {
  if (r < 1 || r > 64) {
    throw std::invalid_argument("retained coefficient count must be in 1..64, got " +
                                std::to_string(r));
  }
}

Block8 forward_2d(const Block8& a, const TransformSpec& t) {
  return t.exact_matrix * a * t.exact_matrix.transpose();
}

Block8 inverse_2d(const Block8& b, const TransformSpec& t) {
  return t.exact_matrix.transpose() * b * t.exact_matrix;
}

Block8 retain(const Block8& b, const RetentionPolicy& policy) {
  return b.cwiseProduct(retention_mask(policy.r()));
}

TransformedImage::TransformedImage(const GrayImage& img, const TransformSpec& t)
    : width_(img.width()), height_(img.height()), matrix_(t.exact_matrix), coefficients_(blocks(img)) {
  for (auto& b : coefficients_) b.samples = matrix_ * b.samples * matrix_.transpose();
}

Plane TransformedImage::reconstruct(const RetentionPolicy& policy) const {
  const Block8& mask = retention_mask(policy.r());
  Plane plane(height_, width_);
  for (const auto& b : coefficients_) {
    plane.block<kBlockSize, kBlockSize>(b.block_row * kBlockSize, b.block_col * kBlockSize) =
        matrix_.transpose() * b.samples.cwiseProduct(mask) * matrix_;
  }
  return plane;
}

GrayImage TransformedImage::compress(const RetentionPolicy& policy) const {
  return quantize(reconstruct(policy));
}

Plane reconstruct(const GrayImage& img, const TransformSpec& t, const RetentionPolicy& policy) {
  auto parts = blocks(img);
  for (auto& b : parts) b.samples = inverse_2d(retain(forward_2d(b.samples, t), policy), t);
  return assemble(img.width(), img.height(), parts);
}

GrayImage compress_image(const GrayImage& img, const TransformSpec& t,
                         const RetentionPolicy& policy) {
  return quantize(reconstruct(img, t, policy));
}

}  // namespace rdct
