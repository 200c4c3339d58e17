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

#include "neit/analytic.hpp"
#include "neit/params.hpp"

namespace neit {

enum class SweepAxis { delta_b, gamma_c, omega_c };
enum class Method { numeric, analytic_full, analytic_approx };

struct SweepSpec {
  SystemParams base;
  SweepAxis axis = SweepAxis::delta_b;
  double min = -10.0;
  double max = 10.0;
  int n_points = 2001;
  Method method = Method::numeric;
  FormVariant variant = kDefaultVariant;  // used by the analytic methods

  void validate() const;
};

struct Sample {
  double axis = 0.0;
  double re = 0.0;  // Re rho23
  double im = 0.0;  // Im rho23 (absorption)
};

struct Window {
  double location = 0.0;  // quadratically refined dip position
  double depth = 0.0;     // lower flanking maximum minus dip value
  double width = 0.0;     // full width at half depth
};

struct Peak {
  double location = 0.0;
  double height = 0.0;
};

struct PointFailure {
  double axis = 0.0;
  std::string message;
};

struct Spectrum {
  std::vector<Sample> samples;    // strictly increasing in axis
  std::vector<Window> windows;    // dips deeper than 10% of the global max
  std::vector<Peak> peaks;        // all interior local maxima
  std::vector<PointFailure> failures;
};

/// Evaluates rho23 on a uniform grid with the chosen method. Per-point
/// solver failures are recorded and skipped, never abort the sweep.
Spectrum sweep(const SweepSpec& spec);

struct LinearFit {
  double slope = 0.0;      // zero-intercept least squares
  double r_squared = 0.0;  // squared Pearson correlation of data vs. fit
  int n_points = 0;
};

struct GammaScan {
  std::vector<Sample> points;  // axis = gamma_c, ascending
  std::optional<LinearFit> fit;  // over the small-damping subset (<= 0.5)
  std::vector<PointFailure> failures;
};

/// Absorption at a fixed probe detuning for each gamma_c in `gammas`.
/// A zero-intercept line is fitted over the subset gamma_c <= 0.5 when it
/// holds at least three points.
GammaScan gamma_c_scan(const SystemParams& base, std::vector<double> gammas,
                       double at_detuning);

struct CollapseReport {
  Spectrum small_spectrum;
  Spectrum ref_spectrum;
  double gamma_c_small = 0.0;
  double gamma_c_ref = 0.0;
  double ratio = 0.0;  // max Im(small) / max Im(ref)
  /// Flanking-maximum over dip value at the local minimum nearest
  /// delta_b = +omega_c/2; order-one when the window has collapsed.
  double contrast_small = 0.0;
  double contrast_ref = 0.0;
};

/// Sweeps both damping values over delta_b in
/// [-(omega_c/2 + 5), +(omega_c/2 + 5)] and compares the spectra.
CollapseReport collapse_analysis(const SystemParams& base, double gamma_c_small,
                                 double gamma_c_ref, int n_points = 2001);

}  // namespace neit
