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
#include <optional>
#include <string>

#include "rdct/op_count.hpp"
#include "rdct/types.hpp"

namespace rdct {

/// Hand-built butterfly available for a transform's integer kernel.
enum class KernelGraph {
  kNone,      // dense evaluation only
  kRoundOff,  // C0 (22 additions)
  kSignedDct, // sign(C) (24 additions)
};

/// A named 8-point transform.
///
/// `exact_matrix` is the normalized matrix used for all fidelity and spectral
/// computations. When both `integer_kernel` and `diagonal` are present,
/// exact_matrix == diag(diagonal) * integer_kernel; the diagonal is the
/// scaling that a codec folds into its quantizer.
struct TransformSpec {
  std::string name;
  Matrix8 exact_matrix = Matrix8::Zero();
  std::optional<Matrix8> integer_kernel;
  std::optional<Vector8> diagonal;
  ArithmeticCost declared_cost;
  KernelGraph graph = KernelGraph::kNone;
};

/// Throws std::invalid_argument if `spec` breaks a TransformSpec invariant
/// (non-finite entries, kernel outside {-1,0,1}, factorization mismatch).
void validate(const TransformSpec& spec);

/// Orthonormal 8-point DCT-II: C[m][n] = a_m cos((2n+1) m pi / 16).
Matrix8 exact_dct_matrix();

/// Round to nearest, ties away from zero. Throws on non-finite input.
std::int64_t round_half_away(double x);

using RoundingFn = std::int64_t (*)(double);

/// Elementwise round(scale * C). Defaults give C0.
Matrix8 round_off_matrix(double scale = 2.0, RoundingFn round = &round_half_away);

Matrix8 c0_matrix();

/// Diagonal of S = sqrt((K K^T)^-1) for a kernel with orthogonal rows.
/// Throws std::domain_error if K K^T is not diagonal or has a zero row.
Vector8 orthogonalizer_diagonal(const Matrix8& kernel);
Vector8 orthogonalizer_diagonal();

/// Scale alpha minimizing ||alpha * kernel - target||_F.
double frobenius_optimal_scale(const Matrix8& kernel, const Matrix8& target);
double frobenius_optimal_scale();

double orthogonality_residual(const Matrix8& m);  // max |M M^T - I|
bool is_orthogonal(const Matrix8& m, double tol = 1e-12);

Matrix8 signed_dct_kernel();

TransformSpec dct_transform();
TransformSpec proposed_transform();  // S * C0
TransformSpec coarse_transform();    // C0 / 2
TransformSpec sdct_transform();      // sign(C) / (2 sqrt 2)

/// C0 * x via the 22-addition butterfly.
Vector8 fast_forward(const Vector8& x);
/// C0^T * X via the transposed butterfly.
Vector8 fast_inverse(const Vector8& X);

/// Counts the operations the spec's kernel actually performs, by
/// instrumented evaluation. Uses the hand-built graph when one exists,
/// otherwise a dense sign-aware product (0 entries are free, each nonzero
/// beyond the first in a row costs one add/sub). The diagonal is not
/// counted. Throws std::invalid_argument if the spec has no integer kernel.
ArithmeticCost audit_cost(const TransformSpec& spec);

/// Comparator matrix files:
///
///   name <identifier>
///   cost <adds> <mults> <shifts>
///   <8 rows of 8 reals>
///
/// '#' starts a comment. Rows whose nonzero entries share one magnitude are
/// factored into diagonal * {-1,0,1} kernel so they can be audited.
TransformSpec parse_comparator(std::istream& in);
TransformSpec load_comparator(const std::filesystem::path& path);
void write_comparator(std::ostream& out, const TransformSpec& spec);
void save_comparator(const TransformSpec& spec, const std::filesystem::path& path);

/// Writes a bare matrix under `name` in the comparator format.
void save_matrix(const Matrix8& m, const std::string& name, const ArithmeticCost& cost,
                 const std::filesystem::path& path);

}  // namespace rdct
