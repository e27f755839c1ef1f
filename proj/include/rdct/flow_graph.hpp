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

// Butterfly realizations of the multiplication-free kernels. Each graph is
// templated on the sample type so the same code path serves plain
// arithmetic and instrumented operation counting (see op_count.hpp).

#include <array>

namespace rdct::graph {

template <typename T>
using Samples = std::array<T, 8>;

/// X = C0 * x with 22 additions: an 8-add input butterfly, a 6-add even
/// half and an 8-add odd half.
template <typename T>
Samples<T> round_off_forward(const Samples<T>& x) {
  const T a0 = x[0] + x[7], b0 = x[0] - x[7];
  const T a1 = x[1] + x[6], b1 = x[1] - x[6];
  const T a2 = x[2] + x[5], b2 = x[2] - x[5];
  const T a3 = x[3] + x[4], b3 = x[3] - x[4];

  const T c0 = a0 + a3;
  const T c1 = a1 + a2;

  Samples<T> X;
  X[0] = c0 + c1;
  X[4] = c0 - c1;
  X[2] = a0 - a3;
  X[6] = a2 - a1;

  X[1] = (b0 + b1) + b2;
  X[3] = (b0 - b2) - b3;
  X[5] = (b0 - b1) + b3;
  X[7] = (b2 - b1) - b3;
  return X;
}

/// x = C0^T * X, the transposed graph of round_off_forward (22 additions).
template <typename T>
Samples<T> round_off_inverse(const Samples<T>& X) {
  const T u = X[0] + X[4];
  const T v = X[0] - X[4];
  const T a0 = u + X[2];
  const T a3 = u - X[2];
  const T a1 = v - X[6];
  const T a2 = v + X[6];

  const T b0 = (X[1] + X[3]) + X[5];
  const T b1 = (X[1] - X[5]) - X[7];
  const T b2 = (X[1] - X[3]) + X[7];
  const T b3 = (X[5] - X[3]) - X[7];

  Samples<T> x;
  x[0] = a0 + b0;
  x[7] = a0 - b0;
  x[1] = a1 + b1;
  x[6] = a1 - b1;
  x[2] = a2 + b2;
  x[5] = a2 - b2;
  x[3] = a3 + b3;
  x[4] = a3 - b3;
  return x;
}

/// X = sign(C) * x with 24 additions: input butterfly, 4-point Hadamard on
/// the even half, shared partial sums on the odd half.
template <typename T>
Samples<T> signed_dct_forward(const Samples<T>& x) {
  const T a0 = x[0] + x[7], b0 = x[0] - x[7];
  const T a1 = x[1] + x[6], b1 = x[1] - x[6];
  const T a2 = x[2] + x[5], b2 = x[2] - x[5];
  const T a3 = x[3] + x[4], b3 = x[3] - x[4];

  const T c0 = a0 + a3, c2 = a0 - a3;
  const T c1 = a1 + a2, c3 = a1 - a2;

  const T p = b0 + b1, q = b0 - b1;
  const T s = b2 + b3, t = b2 - b3;

  Samples<T> X;
  X[0] = c0 + c1;
  X[4] = c0 - c1;
  X[2] = c2 + c3;
  X[6] = c2 - c3;
  X[1] = p + s;
  X[3] = q - s;
  X[5] = q + s;
  X[7] = q + t;
  return X;
}

/// x = sign(C)^T * X (24 additions).
template <typename T>
Samples<T> signed_dct_inverse(const Samples<T>& X) {
  // Even half: sign(C) restricted to rows 0,2,4,6 is a symmetric Hadamard
  // pattern, so its transpose reuses the same butterfly.
  const T e0 = X[0] + X[4], e1 = X[0] - X[4];
  const T e2 = X[2] + X[6], e3 = X[2] - X[6];
  const T a0 = e0 + e2;
  const T a1 = e1 + e3;
  const T a2 = e1 - e3;
  const T a3 = e0 - e2;

  // Odd half rows (X1,X3,X5,X7) over (b0..b3):
  //   X1: + + + +   X3: + - - -   X5: + - + +   X7: + - + -
  const T w = X[1] + X[7];
  const T k = X[1] - X[7];
  const T g = X[3] + X[5];
  const T h = X[5] - X[3];
  const T b0 = w + g;
  const T b1 = k - g;
  const T b2 = w + h;
  const T b3 = k + h;

  Samples<T> x;
  x[0] = a0 + b0;
  x[7] = a0 - b0;
  x[1] = a1 + b1;
  x[6] = a1 - b1;
  x[2] = a2 + b2;
  x[5] = a2 - b2;
  x[3] = a3 + b3;
  x[4] = a3 - b3;
  return x;
}

}  // namespace rdct::graph
