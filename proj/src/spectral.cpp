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

#include "rdct/spectral.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "rdct/format.hpp"

namespace rdct {

namespace {

void check_args(int m, double omega) {
  if (m < 0 || m > 7) throw std::out_of_range("row index must be in 0..7");
  if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
    throw std::out_of_range("omega must be in [0, pi]");
  }
}

std::complex<double> row_response(const Matrix8& t, int m, double omega) {
  std::complex<double> h = 0.0;
  for (int n = 0; n < 8; ++n) h += t(m, n) * std::polar(1.0, -n * omega);
  return h;
}

double grid_point(int i, int panels) {
  // Pin the endpoint exactly so check_args accepts it.
  return i == panels ? std::numbers::pi : std::numbers::pi * i / panels;
}

}  // namespace

std::complex<double> transfer_function(const Matrix8& t, int m, double omega) {
  check_args(m, omega);
  return row_response(t, m, omega);
}

double spectral_error(const Matrix8& t, int m, double omega) {
  check_args(m, omega);
  static const Matrix8 c = exact_dct_matrix();
  return std::norm(row_response(c, m, omega) - row_response(t, m, omega));
}

double error_energy(const Matrix8& t, int m, int panels) {
  if (panels <= 0 || panels % 2) throw std::invalid_argument("Simpson needs an even panel count");
  const double h = std::numbers::pi / panels;
  double sum = spectral_error(t, m, 0.0) + spectral_error(t, m, std::numbers::pi);
  for (int i = 1; i < panels; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * spectral_error(t, m, grid_point(i, panels));
  }
  return sum * h / 3.0;
}

double error_energy_closed_form(const Matrix8& t, int m) {
  check_args(m, 0.0);
  return std::numbers::pi * (exact_dct_matrix().row(m) - t.row(m)).squaredNorm();
}

ErrorEnergyReport error_energy_report(const TransformSpec& spec) {
  ErrorEnergyReport report;
  report.transform = spec.name;
  for (int m = 0; m < 8; ++m) report.epsilon[m] = error_energy(spec.exact_matrix, m);
  for (int m : kReportedRows) report.total += report.epsilon[m];
  return report;
}

void write_energy_csv(std::ostream& out, std::span<const ErrorEnergyReport> reports) {
  out << "transform,m,epsilon\n";
  for (const auto& r : reports) {
    for (int m = 0; m < 8; ++m) {
      out << r.transform << ',' << m << ',' << format_real(r.epsilon[m]) << '\n';
    }
    out << r.transform << ",total," << format_real(r.total) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const TransformSpec> specs, int panels) {
  out << "transform,m,omega,D\n";
  for (const auto& spec : specs) {
    for (int m = 0; m < 8; ++m) {
      for (int i = 0; i <= panels; ++i) {
        const double w = grid_point(i, panels);
        out << spec.name << ',' << m << ',' << format_real(w) << ','
            << format_real(spectral_error(spec.exact_matrix, m, w)) << '\n';
      }
    }
  }
}

}  // namespace rdct
