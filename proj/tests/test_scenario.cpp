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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "neit/scenario.hpp"

using namespace neit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("neit_test_" + std::to_string(std::rand()) +
            std::to_string(reinterpret_cast<std::uintptr_t>(this) & 0xffff));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string stem(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json small_fig3_config(const std::string& stem) {
  return json{{"preset", "fig3"},
              {"sweep", {{"n_points", 101}}},
              {"output", stem}};
}

}  // namespace

TEST_CASE("presets: every published name expands to a valid config") {
  const auto names = preset_names();
  CHECK(names.size() == 6);
  for (const auto& name : names) {
    const ScenarioConfig config = preset_config(name);
    CHECK(config.preset == name);
    CHECK_NOTHROW(config.params.validate());
    CHECK_FALSE(preset_description(name).empty());
  }
  CHECK_THROWS_AS(preset_config("fig99"), std::invalid_argument);
}

TEST_CASE("presets: cs_d2 normalizes the caesium numbers to gamma units") {
  const ScenarioConfig cs = preset_config("cs_d2");
  CHECK(cs.params.omega_a == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cs.params.omega_b == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(cs.params.omega_c == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(cs.params.gamma_a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cs.params.gamma_c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cs.sweep.min == doctest::Approx(-10.0).epsilon(1e-12));
  REQUIRE(cs.physical_gamma_mhz.has_value());
  CHECK(*cs.physical_gamma_mhz == 5.22);
}

TEST_CASE("config: explicit fields override the preset and are echoed") {
  const json j{{"preset", "fig3"},
               {"params", {{"gamma_c", 0.5}}},
               {"output", "custom"}};
  const ScenarioConfig config = parse_config(j);
  CHECK(config.params.gamma_c == 0.5);
  CHECK(config.params.omega_a == 2.0);  // preset value survives
  CHECK(config.output == "custom");
  REQUIRE(config.overrides.size() == 2);
  CHECK(std::find(config.overrides.begin(), config.overrides.end(),
                  "params.gamma_c") != config.overrides.end());
  CHECK(std::find(config.overrides.begin(), config.overrides.end(), "output") !=
        config.overrides.end());
}

TEST_CASE("config: unknown fields are parse errors") {
  CHECK_THROWS_WITH_AS(parse_config(json{{"kind", "sweep"}, {"typo", 1}}),
                       doctest::Contains("typo"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(json{{"params", {{"omega_x", 1.0}}}}),
      doctest::Contains("omega_x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(json{{"kind", "no_such_kind"}}),
                  std::invalid_argument);
}

TEST_CASE("config: file loading failures carry context") {
  TempDir tmp;
  CHECK_THROWS_AS(load_config_file(tmp.stem("missing.json")),
                  std::invalid_argument);
  const std::string empty = tmp.stem("empty.json");
  std::ofstream(empty).close();
  CHECK_THROWS_WITH_AS(load_config_file(empty), doctest::Contains("parse error"),
                       std::invalid_argument);
}

TEST_CASE("run: sweep emits CSV with the documented header and 17 digits") {
  TempDir tmp;
  const ScenarioConfig config = parse_config(small_fig3_config(tmp.stem("s")));
  const RunResult result = run_scenario(config);
  CHECK(result.exit_code == 0);

  const std::string csv = slurp(tmp.stem("s.csv"));
  CHECK(csv.rfind("axis,re_rho23,im_rho23\n", 0) == 0);

  // Values reparse bit-identically.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);
  const auto first_comma = line.find(',');
  const double axis = std::strtod(line.substr(0, first_comma).c_str(), nullptr);
  CHECK(axis == -10.0);

  const json meta = json::parse(slurp(tmp.stem("s.meta.json")));
  CHECK(meta.at("tool") == "neit");
  CHECK(meta.at("preset") == "fig3");
  CHECK(meta.at("results").at("windows").size() == 3);
  CHECK(meta.at("config").at("sweep").at("n_points") == 101);
}

TEST_CASE("run: the metadata sidecar reproduces the CSV bit for bit") {
  TempDir tmp;
  const ScenarioConfig config = parse_config(small_fig3_config(tmp.stem("a")));
  run_scenario(config);

  const json sidecar = json::parse(slurp(tmp.stem("a.meta.json")));
  ScenarioConfig again = parse_config(sidecar);
  again.output = tmp.stem("b");
  run_scenario(again);

  CHECK(slurp(tmp.stem("a.csv")) == slurp(tmp.stem("b.csv")));
}

TEST_CASE("run: analytic sweeps record the solver comparison") {
  TempDir tmp;
  json j{{"preset", "fig3_inset"},
         {"sweep", {{"n_points", 101}}},
         {"output", tmp.stem("inset")}};
  const RunResult result = run_scenario(parse_config(j));
  const auto& comparison = result.metadata.at("results").at("comparison");
  CHECK(comparison.at("variant") == "corrected");
  const double ratio = comparison.at("deviation_over_peak").get<double>();
  CHECK(ratio > 0.0);
  CHECK(ratio <= 0.05);
}

TEST_CASE("run: gamma scan emits fit metadata") {
  TempDir tmp;
  json j{{"preset", "fig5"}, {"output", tmp.stem("scan")}};
  const RunResult result = run_scenario(parse_config(j));
  const auto& fit = result.metadata.at("results").at("fit");
  CHECK(fit.at("n_points") == 5);
  CHECK(fit.at("r_squared").get<double>() >= 0.99);
  CHECK(fs::exists(tmp.stem("scan.csv")));
}

TEST_CASE("run: collapse emits two CSVs and the ratio") {
  TempDir tmp;
  json j{{"preset", "collapse"},
         {"collapse", {{"n_points", 301}}},
         {"output", tmp.stem("c")}};
  const RunResult result = run_scenario(parse_config(j));
  CHECK(fs::exists(tmp.stem("c.small.csv")));
  CHECK(fs::exists(tmp.stem("c.ref.csv")));
  const double ratio = result.metadata.at("results").at("ratio").get<double>();
  CHECK(ratio > 0.0);
  CHECK(ratio < 0.05);
}

TEST_CASE("run: plot script emission") {
  TempDir tmp;
  json j = small_fig3_config(tmp.stem("p"));
  j["emit_plot"] = true;
  run_scenario(parse_config(j));
  const std::string script = slurp(tmp.stem("p.plot.py"));
  CHECK(script.find("p.csv") != std::string::npos);
  CHECK(script.find("matplotlib") != std::string::npos);
}

TEST_CASE("run: no temporary files are left behind") {
  TempDir tmp;
  run_scenario(parse_config(small_fig3_config(tmp.stem("t"))));
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    CHECK(entry.path().extension() != ".tmp");
  }
}
