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

#include "rdct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "rdct/codec.hpp"
#include "rdct/format.hpp"
#include "rdct/imageio.hpp"
#include "rdct/metrics.hpp"
#include "rdct/spectral.hpp"

namespace rdct::cli {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kAllBuiltins = {"dct", "proposed", "coarse", "sdct"};
const std::vector<std::string> kCodecDefaults = {"dct", "proposed", "sdct"};

TransformSpec builtin(const std::string& name) {
  if (name == "dct") return dct_transform();
  if (name == "proposed") return proposed_transform();
  if (name == "coarse") return coarse_transform();
  if (name == "sdct") return sdct_transform();
  throw std::invalid_argument("unknown transform '" + name + "'");
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir.string());
  }
}

std::vector<GrayImage> load_corpus(const std::vector<fs::path>& files) {
  if (files.empty()) throw std::invalid_argument("corpus is empty");
  std::vector<GrayImage> images;
  images.reserve(files.size());
  for (const auto& f : files) images.push_back(read_pgm(f));
  return images;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.r_min < 1 || config.r_max > 64 || config.r_min > config.r_max) {
    throw std::invalid_argument("r-range must satisfy 1 <= r-min <= r-max <= 64");
  }
}

std::vector<std::string> builtin_names() { return kAllBuiltins; }

std::vector<TransformSpec> resolve_transforms(const RunConfig& config,
                                              const std::vector<std::string>& defaults) {
  std::vector<TransformSpec> comparators;
  for (const auto& path : config.comparators) comparators.push_back(load_comparator(path));

  std::vector<TransformSpec> out;
  if (config.transforms.empty()) {
    for (const auto& name : defaults) out.push_back(builtin(name));
    out.insert(out.end(), comparators.begin(), comparators.end());
  } else {
    for (const auto& name : config.transforms) {
      auto it = std::find_if(comparators.begin(), comparators.end(),
                             [&](const TransformSpec& s) { return s.name == name; });
      out.push_back(it != comparators.end() ? *it : builtin(name));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (out[i].name == out[j].name) {
        throw std::invalid_argument("transform '" + out[i].name + "' selected twice");
      }
    }
  }
  return out;
}

std::vector<fs::path> corpus_files(const RunConfig& config) {
  std::vector<fs::path> files;
  for (const auto& entry : config.corpus) {
    if (fs::is_directory(entry)) {
      std::vector<fs::path> found;
      for (const auto& f : fs::directory_iterator(entry)) {
        if (f.is_regular_file() && f.path().extension() == ".pgm") found.push_back(f.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(entry)) {
      files.push_back(entry);
    } else {
      throw std::runtime_error("corpus entry not found: " + entry.string());
    }
  }
  return files;
}

Written cmd_matrices(const RunConfig& config) {
  validate(config);
  ensure_dir(config.out);
  Written written;

  const auto specs = resolve_transforms(config, kAllBuiltins);
  for (const auto& spec : specs) {
    const fs::path path = config.out / (spec.name + ".mat");
    save_comparator(spec, path);
    written.push_back(path);
  }

  const fs::path c0_path = config.out / "c0.mat";
  save_matrix(c0_matrix(), "c0", {22, 0, 0}, c0_path);
  written.push_back(c0_path);

  const fs::path s_path = config.out / "orthogonalizer.mat";
  save_matrix(Matrix8(orthogonalizer_diagonal().asDiagonal()), "orthogonalizer", {}, s_path);
  written.push_back(s_path);

  const fs::path summary = config.out / "matrices_summary.txt";
  auto out = open_output(summary);
  const double scale = frobenius_optimal_scale();
  out << "frobenius_scale " << std::fixed << std::setprecision(4) << scale << '\n';
  out << "frobenius_scale_exact " << format_real(scale) << '\n';
  const Vector8 d = orthogonalizer_diagonal();
  out << "orthogonalizer_diagonal";
  for (double v : d) out << ' ' << format_real(v);
  out << '\n';
  for (const auto& spec : specs) {
    out << "orthogonality_residual " << spec.name << ' '
        << format_real(orthogonality_residual(spec.exact_matrix)) << '\n';
  }
  finish(out, summary);
  written.push_back(summary);
  return written;
}

Written cmd_spectral(const RunConfig& config) {
  validate(config);
  ensure_dir(config.out);
  const auto specs = resolve_transforms(config, kAllBuiltins);

  std::vector<ErrorEnergyReport> reports;
  for (const auto& spec : specs) reports.push_back(error_energy_report(spec));

  const fs::path energy = config.out / "spectral_energy.csv";
  auto e = open_output(energy);
  write_energy_csv(e, reports);
  finish(e, energy);

  const fs::path sweep = config.out / "spectral_sweep.csv";
  auto s = open_output(sweep);
  write_sweep_csv(s, specs);
  finish(s, sweep);
  return {energy, sweep};
}

Written cmd_compress(const RunConfig& config) {
  validate(config);
  ensure_dir(config.out);
  const auto specs = resolve_transforms(config, kCodecDefaults);
  const auto files = corpus_files(config);
  if (files.empty()) throw std::invalid_argument("corpus is empty");

  Written written;
  for (const auto& file : files) {
    const GrayImage img = read_pgm(file);
    for (const auto& spec : specs) {
      const TransformedImage coeffs(img, spec);
      for (int r = config.r_min; r <= config.r_max; ++r) {
        const fs::path path = config.out / (file.stem().string() + "_" + spec.name + "_r" +
                                            std::to_string(r) + ".pgm");
        write_pgm(coeffs.compress(RetentionPolicy(r)), path);
        written.push_back(path);
      }
    }
  }
  return written;
}

Written cmd_bench(const RunConfig& config) {
  validate(config);
  ensure_dir(config.out);
  const auto specs = resolve_transforms(config, kCodecDefaults);
  const auto images = load_corpus(corpus_files(config));
  const auto reports = corpus_sweep(images, specs, config.r_min, config.r_max);

  const fs::path path = config.out / "bench.csv";
  auto out = open_output(path);
  write_report_csv(out, reports);
  finish(out, path);
  return {path};
}

Written cmd_complexity(const RunConfig& config) {
  validate(config);
  ensure_dir(config.out);
  const auto specs = resolve_transforms(config, kAllBuiltins);

  const fs::path path = config.out / "complexity.csv";
  auto out = open_output(path);
  out << "transform,audited_additions,audited_multiplications,audited_shifts,audited_total,"
         "declared_additions,declared_multiplications,declared_shifts,declared_total\n";
  for (const auto& spec : specs) {
    out << spec.name << ',';
    if (spec.integer_kernel || spec.graph != KernelGraph::kNone) {
      const ArithmeticCost c = audit_cost(spec);
      out << c.additions << ',' << c.multiplications << ',' << c.bit_shifts << ',' << c.total();
    } else {
      out << ",,,";
    }
    const ArithmeticCost& d = spec.declared_cost;
    out << ',' << d.additions << ',' << d.multiplications << ',' << d.bit_shifts << ','
        << d.total() << '\n';
  }
  finish(out, path);
  return {path};
}

}  // namespace rdct::cli
