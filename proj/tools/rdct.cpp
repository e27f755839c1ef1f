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

#include <iostream>

#include "CLI11.hpp"
#include "rdct/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, rdct::cli::RunConfig& config) {
  cmd->add_option("--transforms", config.transforms,
                  "Comma-separated transform names (dct, proposed, coarse, sdct, or a "
                  "comparator name)")
      ->delimiter(',');
  cmd->add_option("--r-min", config.r_min, "Smallest retained coefficient count")
      ->capture_default_str();
  cmd->add_option("--r-max", config.r_max, "Largest retained coefficient count")
      ->capture_default_str();
  cmd->add_option("--corpus", config.corpus, "PGM files or directories of PGM files");
  cmd->add_option("--out", config.out, "Output directory")->capture_default_str();
  cmd->add_option("--comparator", config.comparators, "Comparator matrix file (repeatable)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-off 8-point DCT approximation: matrices, spectral analysis, "
               "block compression benchmarks"};
  app.set_config("--config", "", "INI/TOML config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  rdct::cli::RunConfig config;
  using Command = rdct::cli::Written (*)(const rdct::cli::RunConfig&);
  Command selected = nullptr;

  struct Entry {
    const char* name;
    const char* help;
    Command run;
  };
  const Entry entries[] = {
      {"matrices", "Write transform matrices, orthogonality residuals and the Frobenius scale",
       &rdct::cli::cmd_matrices},
      {"spectral", "Write row error energies and the spectral error sweep",
       &rdct::cli::cmd_spectral},
      {"compress", "Write reconstructed images for each transform and retention count",
       &rdct::cli::cmd_compress},
      {"bench", "Average MSE/PSNR/UQI over a corpus for each transform and retention count",
       &rdct::cli::cmd_bench},
      {"complexity", "Write audited and declared arithmetic costs", &rdct::cli::cmd_complexity},
  };
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common_options(cmd, config);
    cmd->callback([&selected, run = e.run] { selected = run; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& path : selected(config)) std::cout << path.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
