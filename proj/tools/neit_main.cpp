// Copyright 2026 The neit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "neit/acceptance.hpp"
#include "neit/scenario.hpp"
#include "neit/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerification = 3;

int do_run(const std::string& config_path, const std::string& preset,
           const std::string& output, bool emit_plot) {
  neit::ScenarioConfig config;
  try {
    if (!preset.empty()) {
      config = neit::preset_config(preset);
    } else {
      config = neit::load_config_file(config_path);
    }
    if (!output.empty()) config.output = output;
    if (emit_plot) config.emit_plot = true;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }

  try {
    const neit::RunResult result = neit::run_scenario(config);
    for (const auto& f : result.outputs) std::cout << "wrote " << f << '\n';
    if (result.exit_code != 0) {
      std::cerr << "error: scenario produced no valid samples\n";
      return kExitNumerical;
    }
    return 0;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "numerical failure: " << err.what() << '\n';
    return kExitNumerical;
  }
}

int do_verify(const std::string& name) {
  try {
    const int failures = neit::print_acceptance(std::cout, name);
    return failures == 0 ? 0 : kExitVerification;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "numerical failure: " << err.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state spectroscopy toolkit for a driven four-level N-type atom"};
  app.set_version_flag("--version", neit::kVersion);
  app.require_subcommand(1);

  std::string config_path, preset, output, verify_name = "all";
  bool emit_plot = false;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "JSON config (or metadata sidecar) path");
  run->add_option("--preset", preset, "run a compiled-in scenario");
  run->add_option("--output", output, "override the output file stem");
  run->add_flag("--emit-plot", emit_plot, "also write a plot script");

  CLI::App* verify = app.add_subcommand("verify", "run acceptance criteria");
  verify->add_option("name", verify_name, "criterion id, name, or scenario alias");

  CLI::App* list = app.add_subcommand("list-presets", "list compiled-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (run->parsed()) {
    if (config_path.empty() == preset.empty()) {
      std::cerr << "error: pass exactly one of <config> or --preset\n";
      return kExitUsage;
    }
    return do_run(config_path, preset, output, emit_plot);
  }
  if (verify->parsed()) {
    return do_verify(verify_name);
  }
  if (list->parsed()) {
    for (const auto& name : neit::preset_names()) {
      std::cout << name << "  -  " << neit::preset_description(name) << '\n';
    }
    return 0;
  }
  return kExitUsage;
}
