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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neit/spectra.hpp"

namespace neit {

enum class ScenarioKind { sweep, gamma_scan, collapse };

struct SweepSettings {
  SweepAxis axis = SweepAxis::delta_b;
  double min = -10.0;
  double max = 10.0;
  int n_points = 2001;
  Method method = Method::numeric;
  FormVariant variant = kDefaultVariant;
};

struct ScanSettings {
  std::vector<double> gammas;
  double at_detuning = 0.0;
};

struct CollapseSettings {
  double gamma_c_small = 1e-7;
  double gamma_c_ref = 0.1;
  int n_points = 2001;
};

/// A fully resolved run description. Configs are JSON; a preset supplies
/// defaults that explicit fields override (overridden paths are echoed in
/// the output metadata). Fields given in physical units (MHz, via the
/// "physical" block) are normalized by the reference damping rate on
/// ingestion; only the gamma value survives as metadata.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::sweep;
  SystemParams params;
  SweepSettings sweep;
  ScanSettings scan;
  CollapseSettings collapse;
  std::string output = "out";
  bool emit_plot = false;
  std::optional<std::string> preset;
  std::optional<double> physical_gamma_mhz;
  std::vector<std::string> overrides;
};

std::vector<std::string> preset_names();
std::string preset_description(const std::string& name);

/// Throws std::invalid_argument on an unknown name.
ScenarioConfig preset_config(const std::string& name);

/// Parses a config object (or a metadata sidecar, whose "config" block is
/// then used). Unknown keys are errors.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config_file(const std::string& path);

nlohmann::json config_to_json(const ScenarioConfig& config);

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 total numerical failure
  std::vector<std::string> outputs;  // files written
  nlohmann::json metadata;
};

/// Executes the scenario and writes <output>.csv (two CSVs for collapse
/// runs), a <output>.meta.json sidecar that can itself be re-run, and
/// optionally a <output>.plot.py script. Files are written atomically and
/// only after the whole computation succeeded.
RunResult run_scenario(const ScenarioConfig& config);

}  // namespace neit
