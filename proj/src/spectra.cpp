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

#include "neit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "neit/bloch.hpp"

namespace neit {

namespace {

struct Extremum {
  int index = 0;
  double location = 0.0;
  double value = 0.0;
};

// Three-point parabola through the grid extremum; falls back to the grid
// point when the curvature has the wrong sign or the vertex leaves the cell.
Extremum refine(const std::vector<Sample>& s, int i, bool minimum) {
  const double y0 = s[i - 1].im, y1 = s[i].im, y2 = s[i + 1].im;
  const double denom = y0 - 2.0 * y1 + y2;
  Extremum e{i, s[i].axis, y1};
  if ((minimum && denom <= 0.0) || (!minimum && denom >= 0.0)) return e;
  const double d = 0.5 * (y0 - y2) / denom;
  if (std::abs(d) > 1.0) return e;
  const double h = 0.5 * (s[i + 1].axis - s[i - 1].axis);
  e.location = s[i].axis + d * h;
  e.value = y1 - 0.25 * (y0 - y2) * d;
  return e;
}

double half_depth_width(const std::vector<Sample>& s, int dip, double dip_value,
                        double depth) {
  const double level = dip_value + 0.5 * depth;
  double left = s.front().axis;
  for (int j = dip; j > 0; --j) {
    if (s[j - 1].im >= level) {
      const double t = (level - s[j].im) / (s[j - 1].im - s[j].im);
      left = s[j].axis + t * (s[j - 1].axis - s[j].axis);
      break;
    }
  }
  double right = s.back().axis;
  for (int j = dip; j + 1 < static_cast<int>(s.size()); ++j) {
    if (s[j + 1].im >= level) {
      const double t = (level - s[j].im) / (s[j + 1].im - s[j].im);
      right = s[j].axis + t * (s[j + 1].axis - s[j].axis);
      break;
    }
  }
  return right - left;
}

void detect_features(Spectrum& spectrum) {
  const auto& s = spectrum.samples;
  const int n = static_cast<int>(s.size());
  if (n < 3) return;

  double global_max = -std::numeric_limits<double>::infinity();
  for (const auto& p : s) global_max = std::max(global_max, p.im);

  for (int i = 1; i + 1 < n; ++i) {
    if (s[i].im < s[i - 1].im && s[i].im <= s[i + 1].im) {
      Extremum e = refine(s, i, /*minimum=*/true);
      double left_max = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < i; ++j) left_max = std::max(left_max, s[j].im);
      double right_max = -std::numeric_limits<double>::infinity();
      for (int j = i + 1; j < n; ++j) right_max = std::max(right_max, s[j].im);
      const double depth = std::min(left_max, right_max) - e.value;
      if (depth > 0.1 * global_max) {
        spectrum.windows.push_back(
            {e.location, depth, half_depth_width(s, i, e.value, depth)});
      }
    } else if (s[i].im > s[i - 1].im && s[i].im >= s[i + 1].im) {
      Extremum e = refine(s, i, /*minimum=*/false);
      spectrum.peaks.push_back({e.location, e.value});
    }
  }
}

Complex evaluate_point(const SweepSpec& spec, double x) {
  if (spec.method == Method::numeric) {
    SystemParams p = spec.base;
    switch (spec.axis) {
      case SweepAxis::delta_b: p.delta_b = x; break;
      case SweepAxis::gamma_c: p.gamma_c = x; break;
      case SweepAxis::omega_c: p.omega_c = x; break;
    }
    return steady_state(build_liouvillian(p)).rho23();
  }
  const NormalizedPoint point{spec.base.omega_a, spec.base.omega_b,
                              spec.base.omega_c, x};
  return spec.method == Method::analytic_full
             ? rho23_full(point, spec.variant).value
             : rho23_approx(point, spec.variant).value;
}

// Local minimum of Im nearest the given axis position, regardless of the
// window qualification threshold; grid values, no refinement.
struct Dip {
  int index = -1;
  double value = 0.0;
};

Dip nearest_dip(const std::vector<Sample>& s, double target) {
  Dip best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < static_cast<int>(s.size()); ++i) {
    if (s[i].im < s[i - 1].im && s[i].im <= s[i + 1].im) {
      const double dist = std::abs(s[i].axis - target);
      if (dist < best_dist) {
        best_dist = dist;
        best = {i, s[i].im};
      }
    }
  }
  return best;
}

double window_contrast(const std::vector<Sample>& s, double target) {
  const Dip dip = nearest_dip(s, target);
  if (dip.index < 0) return 1.0;  // monotone spectrum, nothing to contrast
  double left_max = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < dip.index; ++j) left_max = std::max(left_max, s[j].im);
  double right_max = -std::numeric_limits<double>::infinity();
  for (int j = dip.index + 1; j < static_cast<int>(s.size()); ++j) {
    right_max = std::max(right_max, s[j].im);
  }
  const double flank = std::min(left_max, right_max);
  const double floor = std::numeric_limits<double>::min();
  return flank / std::max(dip.value, floor);
}

}  // namespace

void SweepSpec::validate() const {
  base.validate();
  if (!(min < max)) throw std::invalid_argument("SweepSpec: need min < max");
  if (n_points < 2) throw std::invalid_argument("SweepSpec: need n_points >= 2");
  if (method != Method::numeric && axis != SweepAxis::delta_b) {
    throw std::invalid_argument("SweepSpec: analytic methods only sweep delta_b");
  }
  if (method == Method::analytic_full && base.omega_c == 0.0) {
    throw std::invalid_argument("SweepSpec: analytic_full needs omega_c > 0");
  }
}

Spectrum sweep(const SweepSpec& spec) {
  spec.validate();
  Spectrum spectrum;
  spectrum.samples.reserve(spec.n_points);
  const double step = (spec.max - spec.min) / (spec.n_points - 1);
  for (int i = 0; i < spec.n_points; ++i) {
    const double x = i + 1 == spec.n_points ? spec.max : spec.min + i * step;
    try {
      const Complex value = evaluate_point(spec, x);
      spectrum.samples.push_back({x, value.real(), value.imag()});
    } catch (const std::exception& err) {
      spectrum.failures.push_back({x, err.what()});
    }
  }
  detect_features(spectrum);
  return spectrum;
}

GammaScan gamma_c_scan(const SystemParams& base, std::vector<double> gammas,
                       double at_detuning) {
  std::sort(gammas.begin(), gammas.end());
  GammaScan scan;
  for (double g : gammas) {
    if (g == 0.0) {
      // Boundary case: the stationary manifold may degenerate; the
      // gamma_c -> 0 limit belongs to collapse_analysis.
      scan.failures.push_back(
          {g, "gamma_c = 0 boundary flagged; use collapse_analysis"});
      continue;
    }
    SystemParams p = base;
    p.delta_b = at_detuning;
    p.gamma_c = g;
    try {
      const Complex value = steady_state(build_liouvillian(p)).rho23();
      scan.points.push_back({g, value.real(), value.imag()});
    } catch (const std::exception& err) {
      scan.failures.push_back({g, err.what()});
    }
  }

  std::vector<Sample> small;
  for (const auto& p : scan.points) {
    if (p.axis <= 0.5) small.push_back(p);
  }
  if (small.size() < 3) return scan;

  double sxy = 0.0, sxx = 0.0, sx = 0.0, sy = 0.0;
  for (const auto& p : small) {
    sxy += p.axis * p.im;
    sxx += p.axis * p.axis;
    sx += p.axis;
    sy += p.im;
  }
  LinearFit fit;
  fit.n_points = static_cast<int>(small.size());
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;

  // Squared Pearson correlation between the measured values and the fitted
  // line; scale-invariant, so it equals corr(gamma, im)^2.
  const double n = static_cast<double>(small.size());
  const double mx = sx / n, my = sy / n;
  double cxy = 0.0, cxx = 0.0, cyy = 0.0;
  for (const auto& p : small) {
    cxy += (p.axis - mx) * (p.im - my);
    cxx += (p.axis - mx) * (p.axis - mx);
    cyy += (p.im - my) * (p.im - my);
  }
  fit.r_squared = cxx > 0.0 && cyy > 0.0 ? cxy * cxy / (cxx * cyy) : 0.0;
  scan.fit = fit;
  return scan;
}

CollapseReport collapse_analysis(const SystemParams& base, double gamma_c_small,
                                 double gamma_c_ref, int n_points) {
  const double half_range = 0.5 * base.omega_c + 5.0;
  SweepSpec spec;
  spec.base = base;
  spec.axis = SweepAxis::delta_b;
  spec.min = -half_range;
  spec.max = half_range;
  spec.n_points = n_points;
  spec.method = Method::numeric;

  CollapseReport report;
  report.gamma_c_small = gamma_c_small;
  report.gamma_c_ref = gamma_c_ref;

  spec.base.gamma_c = gamma_c_small;
  report.small_spectrum = sweep(spec);
  spec.base.gamma_c = gamma_c_ref;
  report.ref_spectrum = sweep(spec);

  auto max_im = [](const Spectrum& s) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& p : s.samples) m = std::max(m, p.im);
    return m;
  };
  const double ref_max = max_im(report.ref_spectrum);
  if (!report.ref_spectrum.samples.empty() && ref_max > 0.0 &&
      !report.small_spectrum.samples.empty()) {
    report.ratio = max_im(report.small_spectrum) / ref_max;
  } else {
    report.ratio = std::numeric_limits<double>::quiet_NaN();
  }

  const double window_at = 0.5 * base.omega_c;
  report.contrast_small =
      window_contrast(report.small_spectrum.samples, window_at);
  report.contrast_ref = window_contrast(report.ref_spectrum.samples, window_at);
  return report;
}

}  // namespace neit
