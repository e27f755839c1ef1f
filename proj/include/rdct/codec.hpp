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

#include <array>
#include <utility>

#include "rdct/imageio.hpp"
#include "rdct/transforms.hpp"

namespace rdct {

/// JPEG zigzag scan: entry k is the (row, col) visited k-th.
struct ZigzagOrder {
  std::array<std::pair<int, int>, 64> positions{};

  /// Scan index of (row, col).
  int rank(int row, int col) const;
};

const ZigzagOrder& zigzag_order();

/// Number of leading zigzag coefficients kept per block, 1..64.
class RetentionPolicy {
 public:
  explicit RetentionPolicy(int r);
  int r() const { return r_; }

 private:
  int r_;
};

/// T A T^T.
Block8 forward_2d(const Block8& a, const TransformSpec& t);
/// T^T B T. Exact inverse only when T is orthogonal.
Block8 inverse_2d(const Block8& b, const TransformSpec& t);

/// Zeroes every coefficient at zigzag position >= r.
Block8 retain(const Block8& b, const RetentionPolicy& policy);

/// Forward, retain, inverse per block; no rounding or clamping.
Plane reconstruct(const GrayImage& img, const TransformSpec& t, const RetentionPolicy& policy);

/// reconstruct() quantized to 8 bits. Throws std::invalid_argument for
/// dimensions that are not multiples of 8.
GrayImage compress_image(const GrayImage& img, const TransformSpec& t,
                         const RetentionPolicy& policy);

/// Forward-transformed blocks of an image, reusable across retention counts.
class TransformedImage {
 public:
  TransformedImage(const GrayImage& img, const TransformSpec& t);

  Plane reconstruct(const RetentionPolicy& policy) const;
  GrayImage compress(const RetentionPolicy& policy) const;

 private:
  int width_;
  int height_;
  Matrix8 matrix_;
  std::vector<PlacedBlock> coefficients_;
};

}  // namespace rdct
