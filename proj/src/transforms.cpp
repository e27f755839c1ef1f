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

#include "rdct/transforms.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "rdct/flow_graph.hpp"
#include "rdct/format.hpp"

namespace rdct {

namespace {

constexpr double kConstructionTol = 1e-12;

template <typename T>
graph::Samples<T> to_samples(const Vector8& v, ArithmeticCost* tally) {
  graph::Samples<T> s;
  for (int i = 0; i < 8; ++i) {
    if constexpr (std::is_same_v<T, Counted>) {
      s[i] = Counted(v[i], tally);
    } else {
      s[i] = v[i];
    }
  }
  return s;
}

Vector8 from_samples(const graph::Samples<double>& s) {
  Vector8 v;
  for (int i = 0; i < 8; ++i) v[i] = s[i];
  return v;
}

bool is_unit_entry(double v) { return v == 0.0 || v == 1.0 || v == -1.0; }

// Dense sign-aware product row by row.
ArithmeticCost dense_cost(const Matrix8& kernel) {
  ArithmeticCost tally;
  Vector8 probe = Vector8::LinSpaced(8, 1.0, 8.0);
  for (int m = 0; m < 8; ++m) {
    std::optional<Counted> acc;
    for (int n = 0; n < 8; ++n) {
      const double k = kernel(m, n);
      if (k == 0.0) continue;
      Counted term(probe[n], &tally);
      if (k < 0) term = -term;
      acc = acc ? *acc + term : term;
    }
  }
  return tally;
}

std::optional<KernelGraph> match_graph(const Matrix8& kernel) {
  if (kernel == c0_matrix()) return KernelGraph::kRoundOff;
  if (kernel == signed_dct_kernel()) return KernelGraph::kSignedDct;
  return std::nullopt;
}

// Splits each row into (positive magnitude) * {-1,0,1} pattern when every
// nonzero entry of the row has the same magnitude.
void try_factor(TransformSpec& spec) {
  Matrix8 kernel = Matrix8::Zero();
  Vector8 diag;
  for (int m = 0; m < 8; ++m) {
    double mag = 0.0;
    for (int n = 0; n < 8; ++n) {
      const double v = std::abs(spec.exact_matrix(m, n));
      if (v == 0.0) continue;
      if (mag == 0.0) {
        mag = v;
      } else if (std::abs(v - mag) > 1e-9 * mag) {
        return;
      }
    }
    if (mag == 0.0) return;
    diag[m] = mag;
    for (int n = 0; n < 8; ++n) {
      const double v = spec.exact_matrix(m, n);
      kernel(m, n) = v == 0.0 ? 0.0 : (v > 0 ? 1.0 : -1.0);
    }
  }
  spec.integer_kernel = kernel;
  spec.diagonal = diag;
  spec.graph = match_graph(kernel).value_or(KernelGraph::kNone);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

void validate(const TransformSpec& spec) {
  if (!spec.exact_matrix.allFinite()) {
    throw std::invalid_argument("transform '" + spec.name + "': non-finite matrix entry");
  }
  if (spec.integer_kernel) {
    for (double v : spec.integer_kernel->reshaped()) {
      if (!is_unit_entry(v)) {
        throw std::invalid_argument("transform '" + spec.name +
                                    "': integer kernel entry outside {-1,0,1}");
      }
    }
  }
  if (spec.diagonal && (spec.diagonal->array() <= 0.0).any()) {
    throw std::invalid_argument("transform '" + spec.name + "': diagonal must be positive");
  }
  if (spec.integer_kernel && spec.diagonal) {
    const Matrix8 product = spec.diagonal->asDiagonal() * *spec.integer_kernel;
    if ((product - spec.exact_matrix).cwiseAbs().maxCoeff() > kConstructionTol) {
      throw std::invalid_argument("transform '" + spec.name +
                                  "': exact matrix differs from diag * kernel");
    }
  }
}

Matrix8 exact_dct_matrix() {
  Matrix8 c;
  const double dc = 1.0 / (2.0 * std::numbers::sqrt2);
  for (int m = 0; m < 8; ++m) {
    const double alpha = m == 0 ? dc : 0.5;
    for (int n = 0; n < 8; ++n) {
      c(m, n) = alpha * std::cos((2 * n + 1) * m * std::numbers::pi / 16.0);
    }
  }
  return c;
}

std::int64_t round_half_away(double x) {
  if (!std::isfinite(x)) throw std::domain_error("round_half_away: non-finite input");
  return static_cast<std::int64_t>(std::round(x));
}

Matrix8 round_off_matrix(double scale, RoundingFn round) {
  const Matrix8 c = exact_dct_matrix();
  Matrix8 out;
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n < 8; ++n) out(m, n) = static_cast<double>(round(scale * c(m, n)));
  }
  return out;
}

Matrix8 c0_matrix() { return round_off_matrix(); }

Vector8 orthogonalizer_diagonal(const Matrix8& kernel) {
  const Matrix8 gram = kernel * kernel.transpose();
  const Matrix8 off = gram - Matrix8(gram.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() > kConstructionTol) {
    throw std::domain_error("orthogonalizer: kernel rows are not mutually orthogonal");
  }
  if ((gram.diagonal().array() <= 0.0).any()) {
    throw std::domain_error("orthogonalizer: kernel has a zero row");
  }
  // For diagonal K K^T the principal square root of its inverse is the
  // elementwise reciprocal square root.
  return gram.diagonal().cwiseSqrt().cwiseInverse();
}

Vector8 orthogonalizer_diagonal() { return orthogonalizer_diagonal(c0_matrix()); }

double frobenius_optimal_scale(const Matrix8& kernel, const Matrix8& target) {
  const double denom = kernel.cwiseProduct(kernel).sum();
  if (denom == 0.0) throw std::domain_error("frobenius_optimal_scale: zero kernel");
  return kernel.cwiseProduct(target).sum() / denom;
}

double frobenius_optimal_scale() {
  return frobenius_optimal_scale(c0_matrix(), exact_dct_matrix());
}

double orthogonality_residual(const Matrix8& m) {
  return (m * m.transpose() - Matrix8::Identity()).cwiseAbs().maxCoeff();
}

bool is_orthogonal(const Matrix8& m, double tol) { return orthogonality_residual(m) < tol; }

Matrix8 signed_dct_kernel() {
  // sign(0) = 0; no 8-point DCT entry is zero, so every entry is +-1.
  return exact_dct_matrix().unaryExpr([](double v) {
    if (std::abs(v) < 1e-12) return 0.0;
    return v > 0 ? 1.0 : -1.0;
  });
}

TransformSpec dct_transform() {
  TransformSpec spec;
  spec.name = "dct";
  spec.exact_matrix = exact_dct_matrix();
  // Loeffler's 11-multiplication flow graph.
  spec.declared_cost = {29, 11, 0};
  return spec;
}

TransformSpec proposed_transform() {
  TransformSpec spec;
  spec.name = "proposed";
  spec.integer_kernel = c0_matrix();
  spec.diagonal = orthogonalizer_diagonal(*spec.integer_kernel);
  spec.exact_matrix = spec.diagonal->asDiagonal() * *spec.integer_kernel;
  spec.declared_cost = {22, 0, 0};
  spec.graph = KernelGraph::kRoundOff;
  validate(spec);
  return spec;
}

TransformSpec coarse_transform() {
  TransformSpec spec;
  spec.name = "coarse";
  spec.integer_kernel = c0_matrix();
  spec.diagonal = Vector8::Constant(0.5);
  spec.exact_matrix = 0.5 * *spec.integer_kernel;
  spec.declared_cost = {22, 0, 0};
  spec.graph = KernelGraph::kRoundOff;
  validate(spec);
  return spec;
}

TransformSpec sdct_transform() {
  TransformSpec spec;
  spec.name = "sdct";
  spec.integer_kernel = signed_dct_kernel();
  spec.diagonal = Vector8::Constant(1.0 / (2.0 * std::numbers::sqrt2));
  spec.exact_matrix = spec.diagonal->asDiagonal() * *spec.integer_kernel;
  spec.declared_cost = {24, 0, 0};
  spec.graph = KernelGraph::kSignedDct;
  validate(spec);
  return spec;
}

Vector8 fast_forward(const Vector8& x) {
  return from_samples(graph::round_off_forward(to_samples<double>(x, nullptr)));
}

Vector8 fast_inverse(const Vector8& X) {
  return from_samples(graph::round_off_inverse(to_samples<double>(X, nullptr)));
}

ArithmeticCost audit_cost(const TransformSpec& spec) {
  ArithmeticCost tally;
  const Vector8 probe = Vector8::LinSpaced(8, 1.0, 8.0);
  switch (spec.graph) {
    case KernelGraph::kRoundOff:
      graph::round_off_forward(to_samples<Counted>(probe, &tally));
      return tally;
    case KernelGraph::kSignedDct:
      graph::signed_dct_forward(to_samples<Counted>(probe, &tally));
      return tally;
    case KernelGraph::kNone:
      break;
  }
  if (!spec.integer_kernel) {
    throw std::invalid_argument("audit_cost: transform '" + spec.name +
                                "' has no executable kernel");
  }
  return dense_cost(*spec.integer_kernel);
}

TransformSpec parse_comparator(std::istream& in) {
  TransformSpec spec;
  bool have_name = false;
  bool have_cost = false;
  int row = 0;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string head;
    if (!(line >> head)) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("comparator line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_name) {
      if (head != "name" || !(line >> spec.name)) fail("expected 'name <identifier>'");
      have_name = true;
      continue;
    }
    if (!have_cost) {
      std::int64_t a, m, s;
      if (head != "cost" || !(line >> a >> m >> s)) fail("expected 'cost <adds> <mults> <shifts>'");
      if (a < 0 || m < 0 || s < 0) fail("negative operation count");
      spec.declared_cost = {a, m, s};
      have_cost = true;
      continue;
    }
    if (row >= 8) fail("more than 8 matrix rows");
    line.clear();
    line.seekg(0);
    int col = 0;
    std::string token;
    while (line >> token) {
      if (col >= 8) fail("more than 8 entries in row");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        fail("malformed number '" + token + "'");
      }
      if (used != token.size()) fail("malformed number '" + token + "'");
      if (!std::isfinite(v)) fail("non-finite entry");
      spec.exact_matrix(row, col++) = v;
    }
    if (col != 8) fail("expected 8 entries, found " + std::to_string(col));
    ++row;
  }
  if (!have_name || !have_cost) throw std::runtime_error("comparator: missing header");
  if (row != 8) {
    throw std::runtime_error("comparator: expected 8 matrix rows, found " + std::to_string(row));
  }
  try_factor(spec);
  validate(spec);
  return spec;
}

TransformSpec load_comparator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open comparator file " + path.string());
  try {
    return parse_comparator(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_comparator(std::ostream& out, const TransformSpec& spec) {
  out << "name " << spec.name << '\n';
  out << "cost " << spec.declared_cost.additions << ' ' << spec.declared_cost.multiplications
      << ' ' << spec.declared_cost.bit_shifts << '\n';
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n < 8; ++n) {
      if (n) out << ' ';
      out << format_real(spec.exact_matrix(m, n));
    }
    out << '\n';
  }
}

void save_comparator(const TransformSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_comparator(out, spec);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void save_matrix(const Matrix8& m, const std::string& name, const ArithmeticCost& cost,
                 const std::filesystem::path& path) {
  TransformSpec spec;
  spec.name = name;
  spec.exact_matrix = m;
  spec.declared_cost = cost;
  save_comparator(spec, path);
}

}  // namespace rdct
