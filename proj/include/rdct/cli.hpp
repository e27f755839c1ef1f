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

#include <filesystem>
#include <string>
#include <vector>

#include "rdct/transforms.hpp"

namespace rdct::cli {

struct RunConfig {
  std::vector<std::string> transforms;            // empty: subcommand default
  int r_min = 1;
  int r_max = 45;
  std::vector<std::filesystem::path> corpus;      // directories and/or .pgm files
  std::filesystem::path out = ".";
  std::vector<std::filesystem::path> comparators; // comparator matrix files
};

/// Throws std::invalid_argument for an r-range outside [1, 64].
void validate(const RunConfig& config);

/// Built-in names: dct, proposed, coarse, sdct.
std::vector<std::string> builtin_names();

/// Resolves `config.transforms` against the built-ins and loaded
/// comparators. With no explicit selection, returns `defaults` followed by
/// every comparator.
std::vector<TransformSpec> resolve_transforms(const RunConfig& config,
                                              const std::vector<std::string>& defaults);

/// Expands directories to their *.pgm files. Explicit files keep the
/// given order; each directory contributes its files sorted by name.
std::vector<std::filesystem::path> corpus_files(const RunConfig& config);

using Written = std::vector<std::filesystem::path>;

Written cmd_matrices(const RunConfig& config);
Written cmd_spectral(const RunConfig& config);
Written cmd_compress(const RunConfig& config);
Written cmd_bench(const RunConfig& config);
Written cmd_complexity(const RunConfig& config);

}  // namespace rdct::cli
