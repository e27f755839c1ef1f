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

#include <Eigen/Core>

namespace rdct {

template <typename Scalar>
using Matrix8T = Eigen::Matrix<Scalar, 8, 8, Eigen::RowMajor>;

template <typename Scalar>
using Vector8T = Eigen::Matrix<Scalar, 8, 1>;

using Matrix8 = Matrix8T<double>;
using Vector8 = Vector8T<double>;

// Pixel- or coefficient-domain 8x8 block.
using Block8 = Matrix8;

// Row-major real-valued image plane (pre-quantization reconstructions).
using Plane = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kBlockSize = 8;

}  // namespace rdct
