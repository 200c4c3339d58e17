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

#include "neit/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "neit/version.hpp"

namespace neit {

using nlohmann::json;

namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---- enum <-> string ----

const std::map<std::string, ScenarioKind> kKinds = {
    {"sweep", ScenarioKind::sweep},
    {"gamma_scan", ScenarioKind::gamma_scan},
    {"collapse", ScenarioKind::collapse}};
const std::map<std::string, SweepAxis> kAxes = {
    {"delta_b", SweepAxis::delta_b},
    {"gamma_c", SweepAxis::gamma_c},
    {"omega_c", SweepAxis::omega_c}};
const std::map<std::string, Method> kMethods = {
    {"numeric", Method::numeric},
    {"analytic_full", Method::analytic_full},
    {"analytic_approx", Method::analytic_approx}};
const std::map<std::string, FormVariant> kVariants = {
    {"corrected", FormVariant::corrected}, {"printed", FormVariant::printed}};

template <typename T>
std::string to_string(const std::map<std::string, T>& table, T value) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  throw std::logic_error("unmapped enum value");
}

template <typename T>
T from_string(const std::map<std::string, T>& table, const std::string& name,
              const char* what) {
  auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
  }
  return it->second;
}

// ---- strict JSON helpers ----

void require_keys(const json& j, const char* where,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string("config: '") + where +
                                "' must be a JSON object");
  }
  for (const auto& [key, unused] : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) { known = true; break; }
    }
    if (!known) {
      throw std::invalid_argument(std::string("config: unknown field '") + where +
                                  "." + key + "'");
    }
  }
}

double get_number(const json& j, const char* where, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw std::invalid_argument(std::string("config: '") + where + "." + key +
                                "' must be a number");
  }
  return j.at(key).get<double>();
}

// ---- sub-object parsing ----

SystemParams parse_params(const json& j, const SystemParams& base) {
  require_keys(j, "params",
               {"omega_a", "omega_b", "omega_c", "delta_a", "delta_b", "delta_c",
                "gamma_a", "gamma_b", "gamma_c"});
  SystemParams p = base;
  p.omega_a = get_number(j, "params", "omega_a", p.omega_a);
  p.omega_b = get_number(j, "params", "omega_b", p.omega_b);
  p.omega_c = get_number(j, "params", "omega_c", p.omega_c);
  p.delta_a = get_number(j, "params", "delta_a", p.delta_a);
  p.delta_b = get_number(j, "params", "delta_b", p.delta_b);
  p.delta_c = get_number(j, "params", "delta_c", p.delta_c);
  p.gamma_a = get_number(j, "params", "gamma_a", p.gamma_a);
  p.gamma_b = get_number(j, "params", "gamma_b", p.gamma_b);
  p.gamma_c = get_number(j, "params", "gamma_c", p.gamma_c);
  return p;
}

SweepSettings parse_sweep(const json& j, const SweepSettings& base) {
  require_keys(j, "sweep", {"axis", "min", "max", "n_points", "method", "variant"});
  SweepSettings s = base;
  if (j.contains("axis")) s.axis = from_string(kAxes, j.at("axis"), "sweep axis");
  s.min = get_number(j, "sweep", "min", s.min);
  s.max = get_number(j, "sweep", "max", s.max);
  if (j.contains("n_points")) s.n_points = j.at("n_points").get<int>();
  if (j.contains("method")) s.method = from_string(kMethods, j.at("method"), "method");
  if (j.contains("variant")) {
    s.variant = from_string(kVariants, j.at("variant"), "variant");
  }
  return s;
}

ScanSettings parse_scan(const json& j, const ScanSettings& base) {
  require_keys(j, "scan", {"gammas", "at_detuning"});
  ScanSettings s = base;
  if (j.contains("gammas")) s.gammas = j.at("gammas").get<std::vector<double>>();
  s.at_detuning = get_number(j, "scan", "at_detuning", s.at_detuning);
  return s;
}

CollapseSettings parse_collapse(const json& j, const CollapseSettings& base) {
  require_keys(j, "collapse", {"gamma_c_small", "gamma_c_ref", "n_points"});
  CollapseSettings s = base;
  s.gamma_c_small = get_number(j, "collapse", "gamma_c_small", s.gamma_c_small);
  s.gamma_c_ref = get_number(j, "collapse", "gamma_c_ref", s.gamma_c_ref);
  if (j.contains("n_points")) s.n_points = j.at("n_points").get<int>();
  return s;
}

void collect_overrides(const json& j, std::vector<std::string>& out) {
  for (const auto& [key, value] : j.items()) {
    if (key == "preset") continue;
    if (value.is_object()) {
      for (const auto& [sub, unused] : value.items()) out.push_back(key + "." + sub);
    } else {
      out.push_back(key);
    }
  }
}

/// Divide every rate-like quantity by gamma (all config quantities are
/// rates or frequencies, so everything scales).
void normalize_physical(ScenarioConfig& config, double gamma_mhz) {
  if (!(gamma_mhz > 0.0) || !std::isfinite(gamma_mhz)) {
    throw std::invalid_argument("config: physical.gamma_mhz must be a positive number");
  }
  const double inv = 1.0 / gamma_mhz;
  auto& p = config.params;
  for (double* v : {&p.omega_a, &p.omega_b, &p.omega_c, &p.delta_a, &p.delta_b,
                    &p.delta_c, &p.gamma_a, &p.gamma_b, &p.gamma_c}) {
    *v *= inv;
  }
  config.sweep.min *= inv;
  config.sweep.max *= inv;
  for (double& g : config.scan.gammas) g *= inv;
  config.scan.at_detuning *= inv;
  config.collapse.gamma_c_small *= inv;
  config.collapse.gamma_c_ref *= inv;
  config.physical_gamma_mhz = gamma_mhz;
}

ScenarioConfig parse_config_object(const json& j);

// ---- presets ----

struct PresetEntry {
  const char* description;
  json config;
};

const std::map<std::string, PresetEntry>& preset_table() {
  static const std::map<std::string, PresetEntry> table = {
      {"fig3",
       {"absorption spectrum with three transparency windows (g_c = 10)",
        json{{"kind", "sweep"},
             {"params",
              {{"omega_a", 2.0}, {"omega_b", 0.2}, {"omega_c", 10.0},
               {"gamma_a", 1.0}, {"gamma_b", 1.0}, {"gamma_c", 1.0}}},
             {"sweep",
              {{"axis", "delta_b"}, {"min", -10.0}, {"max", 10.0},
               {"n_points", 2001}, {"method", "numeric"}}},
             {"output", "fig3"}}}},
      {"fig3_inset",
       {"closed-form spectrum at the fig3 parameters, compared against the solver",
        json{{"kind", "sweep"},
             {"params",
              {{"omega_a", 2.0}, {"omega_b", 0.2}, {"omega_c", 10.0},
               {"gamma_a", 1.0}, {"gamma_b", 1.0}, {"gamma_c", 1.0}}},
             {"sweep",
              {{"axis", "delta_b"}, {"min", -10.0}, {"max", 10.0},
               {"n_points", 2001}, {"method", "analytic_full"},
               {"variant", "corrected"}}},
             {"output", "fig3_inset"}}}},
      {"fig4",
       {"absorption spectrum at reduced upper-level damping (gamma_c = 0.2)",
        json{{"kind", "sweep"},
             {"params",
              {{"omega_a", 2.0}, {"omega_b", 0.2}, {"omega_c", 10.0},
               {"gamma_a", 1.0}, {"gamma_b", 1.0}, {"gamma_c", 0.2}}},
             {"sweep",
              {{"axis", "delta_b"}, {"min", -10.0}, {"max", 10.0},
               {"n_points", 2001}, {"method", "numeric"}}},
             {"output", "fig4"}}}},
      {"fig5",
       {"window absorption versus gamma_c at delta_b = omega_c/2, with linear fit",
        json{{"kind", "gamma_scan"},
             {"params",
              {{"omega_a", 2.0}, {"omega_b", 0.2}, {"omega_c", 10.0},
               {"gamma_a", 1.0}, {"gamma_b", 1.0}, {"gamma_c", 1.0}}},
             {"scan",
              {{"gammas", {0.05, 0.1, 0.2, 0.3, 0.5, 1.0, 2.0}},
               {"at_detuning", 5.0}}},
             {"output", "fig5"}}}},
      {"collapse",
       {"transparency-window collapse at vanishing gamma_c (omega_c = 20)",
        json{{"kind", "collapse"},
             {"params",
              {{"omega_a", 2.0}, {"omega_b", 0.2}, {"omega_c", 20.0},
               {"gamma_a", 1.0}, {"gamma_b", 1.0}, {"gamma_c", 0.1}}},
             {"collapse",
              {{"gamma_c_small", 1e-7}, {"gamma_c_ref", 0.1}, {"n_points", 2001}}},
             {"output", "collapse"}}}},
      {"cs_d2",
       {"fig3 scenario stated in caesium D2 units (gamma = 2*pi x 5.22 MHz)",
        json{{"kind", "sweep"},
             {"physical", {{"gamma_mhz", 5.22}}},
             {"params",
              {{"omega_a", 10.44}, {"omega_b", 1.044}, {"omega_c", 52.2},
               {"gamma_a", 5.22}, {"gamma_b", 5.22}, {"gamma_c", 5.22}}},
             {"sweep",
              {{"axis", "delta_b"}, {"min", -52.2}, {"max", 52.2},
               {"n_points", 2001}, {"method", "numeric"}}},
             {"output", "cs_d2"}}}},
  };
  return table;
}

ScenarioConfig parse_config_object(const json& j) {
  require_keys(j, "config",
               {"preset", "kind", "params", "sweep", "scan", "collapse", "output",
                "emit_plot", "physical"});

  ScenarioConfig config;
  json merged = j;
  if (j.contains("preset")) {
    const std::string name = j.at("preset").get<std::string>();
    auto it = preset_table().find(name);
    if (it == preset_table().end()) {
      throw std::invalid_argument("unknown preset '" + name + "'");
    }
    merged = it->second.config;
    // Explicit fields override the preset; echo what was overridden.
    for (const auto& [key, value] : j.items()) {
      if (key == "preset") continue;
      if (value.is_object() && merged.contains(key) && merged[key].is_object()) {
        for (const auto& [sub, sv] : value.items()) merged[key][sub] = sv;
      } else {
        merged[key] = value;
      }
    }
    config.preset = name;
    collect_overrides(j, config.overrides);
  }

  if (merged.contains("kind")) {
    config.kind = from_string(kKinds, merged.at("kind"), "kind");
  }
  if (merged.contains("params")) {
    config.params = parse_params(merged.at("params"), config.params);
  }
  if (merged.contains("sweep")) {
    config.sweep = parse_sweep(merged.at("sweep"), config.sweep);
  }
  if (merged.contains("scan")) {
    config.scan = parse_scan(merged.at("scan"), config.scan);
  }
  if (merged.contains("collapse")) {
    config.collapse = parse_collapse(merged.at("collapse"), config.collapse);
  }
  if (merged.contains("output")) config.output = merged.at("output").get<std::string>();
  if (merged.contains("emit_plot")) config.emit_plot = merged.at("emit_plot").get<bool>();
  if (merged.contains("physical")) {
    require_keys(merged.at("physical"), "physical", {"gamma_mhz"});
    normalize_physical(config,
                       get_number(merged.at("physical"), "physical", "gamma_mhz", 0.0));
  }
  config.params.validate();
  return config;
}

// ---- output writers ----

void atomic_write(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

std::string to_csv(const std::vector<Sample>& samples) {
  std::ostringstream out;
  out << "axis,re_rho23,im_rho23\n";
  for (const auto& s : samples) {
    out << format17(s.axis) << ',' << format17(s.re) << ',' << format17(s.im) << '\n';
  }
  return out.str();
}

json features_json(const Spectrum& s) {
  json windows = json::array();
  for (const auto& w : s.windows) {
    windows.push_back({{"location", w.location}, {"depth", w.depth}, {"width", w.width}});
  }
  json peaks = json::array();
  for (const auto& p : s.peaks) {
    peaks.push_back({{"location", p.location}, {"height", p.height}});
  }
  json failures = json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"axis", f.axis}, {"error", f.message}});
  }
  return {{"windows", windows}, {"peaks", peaks}, {"failures", failures}};
}

std::string plot_script(const ScenarioConfig& config) {
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "def load(path):\n"
     << "    with open(path) as fh:\n"
     << "        rows = list(csv.DictReader(fh))\n"
     << "    x = [float(r['axis']) for r in rows]\n"
     << "    im = [float(r['im_rho23']) for r in rows]\n"
     << "    return x, im\n\n";
  if (config.kind == ScenarioKind::collapse) {
    py << "for name, label in [('" << config.output << ".ref.csv', 'reference'),\n"
       << "                    ('" << config.output << ".small.csv', 'small damping')]:\n"
       << "    x, im = load(name)\n"
       << "    plt.plot(x, im, label=label)\n"
       << "plt.legend()\n";
  } else {
    py << "x, im = load('" << config.output << ".csv')\n"
       << "plt.plot(x, im)\n";
  }
  const char* xlabel =
      config.kind == ScenarioKind::gamma_scan
          ? "gamma_c / gamma"
          : (config.sweep.axis == SweepAxis::delta_b
                 ? "delta_b / gamma"
                 : (config.sweep.axis == SweepAxis::gamma_c ? "gamma_c / gamma"
                                                            : "omega_c / gamma"));
  py << "plt.xlabel('" << xlabel << "')\n"
     << "plt.ylabel('Im rho23')\n"
     << "plt.title('" << config.output << "')\n"
     << "plt.savefig('" << config.output << ".png', dpi=160)\n";
  return py.str();
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : preset_table()) names.push_back(name);
  return names;
}

std::string preset_description(const std::string& name) {
  auto it = preset_table().find(name);
  if (it == preset_table().end()) {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return it->second.description;
}

ScenarioConfig preset_config(const std::string& name) {
  auto it = preset_table().find(name);
  if (it == preset_table().end()) {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  ScenarioConfig config = parse_config_object(it->second.config);
  config.preset = name;
  return config;
}

ScenarioConfig parse_config(const json& j) {
  if (j.is_object() && j.contains("config")) {
    // Metadata sidecar: re-run from its resolved config block.
    return parse_config_object(j.at("config"));
  }
  return parse_config_object(j);
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument("config parse error in '" + path + "': " + err.what());
  }
  return parse_config(j);
}

json config_to_json(const ScenarioConfig& config) {
  json j;
  j["kind"] = to_string(kKinds, config.kind);
  j["params"] = {{"omega_a", config.params.omega_a},
                 {"omega_b", config.params.omega_b},
                 {"omega_c", config.params.omega_c},
                 {"delta_a", config.params.delta_a},
                 {"delta_b", config.params.delta_b},
                 {"delta_c", config.params.delta_c},
                 {"gamma_a", config.params.gamma_a},
                 {"gamma_b", config.params.gamma_b},
                 {"gamma_c", config.params.gamma_c}};
  switch (config.kind) {
    case ScenarioKind::sweep:
      j["sweep"] = {{"axis", to_string(kAxes, config.sweep.axis)},
                    {"min", config.sweep.min},
                    {"max", config.sweep.max},
                    {"n_points", config.sweep.n_points},
                    {"method", to_string(kMethods, config.sweep.method)},
                    {"variant", to_string(kVariants, config.sweep.variant)}};
      break;
    case ScenarioKind::gamma_scan:
      j["scan"] = {{"gammas", config.scan.gammas},
                   {"at_detuning", config.scan.at_detuning}};
      break;
    case ScenarioKind::collapse:
      j["collapse"] = {{"gamma_c_small", config.collapse.gamma_c_small},
                       {"gamma_c_ref", config.collapse.gamma_c_ref},
                       {"n_points", config.collapse.n_points}};
      break;
  }
  j["output"] = config.output;
  j["emit_plot"] = config.emit_plot;
  return j;
}

RunResult run_scenario(const ScenarioConfig& config) {
  config.params.validate();

  RunResult result;
  json results;
  std::map<std::string, std::string> files;  // path -> contents

  switch (config.kind) {
    case ScenarioKind::sweep: {
      SweepSpec spec;
      spec.base = config.params;
      spec.axis = config.sweep.axis;
      spec.min = config.sweep.min;
      spec.max = config.sweep.max;
      spec.n_points = config.sweep.n_points;
      spec.method = config.sweep.method;
      spec.variant = config.sweep.variant;
      const Spectrum spectrum = sweep(spec);
      files[config.output + ".csv"] = to_csv(spectrum.samples);
      results = features_json(spectrum);
      if (spectrum.samples.empty()) result.exit_code = 2;

      if (spec.method != Method::numeric && !spectrum.samples.empty()) {
        // Deviation of the closed form from the solver, for the record.
        SweepSpec numeric = spec;
        numeric.method = Method::numeric;
        const Spectrum reference = sweep(numeric);
        double peak = 0.0, dev = 0.0;
        for (const auto& s : reference.samples) peak = std::max(peak, s.im);
        std::size_t k = 0;
        for (const auto& s : spectrum.samples) {
          while (k < reference.samples.size() &&
                 reference.samples[k].axis < s.axis) {
            ++k;
          }
          if (k < reference.samples.size() && reference.samples[k].axis == s.axis) {
            dev = std::max(dev, std::abs(s.im - reference.samples[k].im));
          }
        }
        results["comparison"] = {
            {"variant", to_string(kVariants, spec.variant)},
            {"numeric_peak_im", peak},
            {"max_im_deviation", dev},
            {"deviation_over_peak", peak > 0.0 ? dev / peak : 0.0}};
      }
      break;
    }
    case ScenarioKind::gamma_scan: {
      const GammaScan scan =
          gamma_c_scan(config.params, config.scan.gammas, config.scan.at_detuning);
      files[config.output + ".csv"] = to_csv(scan.points);
      json failures = json::array();
      for (const auto& f : scan.failures) {
        failures.push_back({{"axis", f.axis}, {"error", f.message}});
      }
      results["failures"] = failures;
      results["at_detuning"] = config.scan.at_detuning;
      if (scan.fit) {
        results["fit"] = {{"slope", scan.fit->slope},
                          {"r_squared", scan.fit->r_squared},
                          {"n_points", scan.fit->n_points}};
      } else {
        results["fit"] = nullptr;
      }
      if (scan.points.empty()) result.exit_code = 2;
      break;
    }
    case ScenarioKind::collapse: {
      const CollapseReport report =
          collapse_analysis(config.params, config.collapse.gamma_c_small,
                            config.collapse.gamma_c_ref, config.collapse.n_points);
      files[config.output + ".small.csv"] = to_csv(report.small_spectrum.samples);
      files[config.output + ".ref.csv"] = to_csv(report.ref_spectrum.samples);
      results["ratio"] = report.ratio;
      results["contrast_small"] = report.contrast_small;
      results["contrast_ref"] = report.contrast_ref;
      results["gamma_c_small"] = report.gamma_c_small;
      results["gamma_c_ref"] = report.gamma_c_ref;
      results["small"] = features_json(report.small_spectrum);
      results["ref"] = features_json(report.ref_spectrum);
      if (report.small_spectrum.samples.empty() ||
          report.ref_spectrum.samples.empty()) {
        result.exit_code = 2;
      }
      break;
    }
  }

  json meta;
  meta["tool"] = "neit";
  meta["version"] = kVersion;
  meta["preset"] = config.preset ? json(*config.preset) : json(nullptr);
  meta["overrides"] = config.overrides;
  if (config.physical_gamma_mhz) {
    meta["physical_gamma_mhz"] = *config.physical_gamma_mhz;
  }
  meta["config"] = config_to_json(config);
  meta["results"] = results;
  files[config.output + ".meta.json"] = meta.dump(2) + "\n";
  if (config.emit_plot) {
    files[config.output + ".plot.py"] = plot_script(config);
  }

  for (const auto& [path, contents] : files) {
    atomic_write(path, contents);
    result.outputs.push_back(path);
  }
  result.metadata = meta;
  return result;
}

}  // namespace neit
