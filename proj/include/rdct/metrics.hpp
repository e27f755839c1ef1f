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

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rdct/imageio.hpp"
#include "rdct/transforms.hpp"

namespace rdct {

inline constexpr double kPsnrPeak = 255.0;
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();
inline constexpr int kUqiWindow = 8;

struct QualityScores {
  double mse = 0.0;
  double psnr = kInfinitePsnr;
  double uqi = 1.0;
};

/// All metrics throw std::invalid_argument on mismatched dimensions.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / mse); kInfinitePsnr when mse == 0.
double psnr_from_mse(double mse);
double psnr(const GrayImage& a, const GrayImage& b);

/// Universal quality index: mean over all stride-1 window x window blocks of
///
///   4 s_xy mean_x mean_y / ((s_x^2 + s_y^2)(mean_x^2 + mean_y^2)).
///
/// Windows where one factor of the denominator vanishes fall back to the
/// other factor's term (2 mean_x mean_y / (mean_x^2 + mean_y^2) or
/// 2 s_xy / (s_x^2 + s_y^2)); windows where both vanish score 1.
double uqi(const GrayImage& a, const GrayImage& b, int window = kUqiWindow);

QualityScores score(const GrayImage& reference, const GrayImage& test);

/// 100 |value - reference| / |reference|. Throws std::domain_error when
/// reference is 0.
double ape(double value, double reference);

struct CompressionReport {
  std::string transform;
  int r = 0;
  double avg_mse = 0.0;
  double avg_psnr = 0.0;  // kInfinitePsnr if any image reconstructs losslessly
  double avg_uqi = 0.0;
  double ape_mse = 0.0;   // NaN where the DCT reference is 0
  double ape_uqi = 0.0;
};

/// Compresses every image with every spec at every r in [r_min, r_max] and
/// averages the scores over the corpus. The exact DCT is always included
/// (prepended when absent) and serves as the APE reference. Output order is
/// spec order then ascending r, and is independent of corpus order.
std::vector<CompressionReport> corpus_sweep(std::span<const GrayImage> images,
                                            std::span<const TransformSpec> specs, int r_min,
                                            int r_max, unsigned threads = 0);

/// CSV `transform,r,avg_mse,avg_psnr,avg_uqi,ape_mse,ape_uqi`.
void write_report_csv(std::ostream& out, std::span<const CompressionReport> reports);

}  // namespace rdct
