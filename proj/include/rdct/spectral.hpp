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
#include <complex>
#include <iosfwd>
#include <span>
#include <string>

#include "rdct/transforms.hpp"

namespace rdct {

/// Rows compared in the error-energy table; rows 0 and 4 coincide with the
/// DCT for every transform of interest and are reported separately.
inline constexpr std::array<int, 6> kReportedRows = {1, 2, 3, 5, 6, 7};

/// Composite Simpson panels over [0, pi].
inline constexpr int kQuadraturePanels = 1024;

/// H_m(w; T) = sum_n T[m][n] exp(-j n w), row m read as FIR taps.
/// Throws std::out_of_range for m outside 0..7 or w outside [0, pi].
std::complex<double> transfer_function(const Matrix8& t, int m, double omega);

/// |H_m(w; C) - H_m(w; T)|^2 against the exact DCT.
double spectral_error(const Matrix8& t, int m, double omega);

/// Integral of spectral_error over [0, pi] by composite Simpson.
double error_energy(const Matrix8& t, int m, int panels = kQuadraturePanels);

/// pi * ||c_m - t_m||^2. Equal to error_energy since the cross terms
/// integrate cos(k w) over [0, pi] to zero.
double error_energy_closed_form(const Matrix8& t, int m);

struct ErrorEnergyReport {
  std::string transform;
  std::array<double, 8> epsilon{};
  double total = 0.0;  // over kReportedRows
};

ErrorEnergyReport error_energy_report(const TransformSpec& spec);

/// CSV `transform,m,epsilon`, one `total` row per transform.
void write_energy_csv(std::ostream& out, std::span<const ErrorEnergyReport> reports);

/// CSV `transform,m,omega,D` sampled on the quadrature grid (panels + 1
/// points per row, all eight rows).
void write_sweep_csv(std::ostream& out, std::span<const TransformSpec> specs,
                     int panels = kQuadraturePanels);

}  // namespace rdct
