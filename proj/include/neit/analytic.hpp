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

#include "neit/types.hpp"

namespace neit {

/// A point of the normalized (gamma-unit) parameter space used by the
/// closed-form expressions. All of them assume resonant pumps
/// (delta_a = delta_c = 0) and equal dampings gamma_a = gamma_b = gamma_c
/// unless stated otherwise.
struct NormalizedPoint {
  double g_a = 0.0;
  double g_b = 0.0;
  double g_c = 0.0;
  double delta_b = 0.0;

  double delta_plus() const { return delta_b - 0.5 * g_c; }
  double delta_minus() const { return delta_b + 0.5 * g_c; }
  double kappa() const;  // g_c/g_a, requires g_a > 0
  double zeta() const;   // g_b/g_a, requires g_a > 0
};

/// Two readings of the closed forms circulate; they differ only in
/// typo-level details (a sign on the E-difference term and the coefficient
/// of the squared E-difference in the full form's denominator; the
/// argument of the numerator in the simplified form). `corrected` is the
/// reading validated against the master-equation steady state: at
/// g_a = 2, g_b = 0.2, g_c = 10 its Im part tracks the solver within 2.6%
/// of the peak absorption over delta_b in [-10, 10], while `printed`
/// misses by more than the peak itself. `corrected` is also exactly the
/// first-order-in-g_b steady-state solution.
enum class FormVariant { corrected, printed };

inline constexpr FormVariant kDefaultVariant = FormVariant::corrected;

/// Value plus a regime flag; out-of-regime points are evaluated anyway and
/// only flagged, since probing regime boundaries is legitimate.
struct AnalyticValue {
  Complex value{};
  bool in_regime = false;
};

struct AnalyticReal {
  double value = 0.0;
  bool in_regime = false;
};

/// Full weak-probe susceptibility rho23(delta_b). Regime: g_b <= 0.1 g_a.
/// Rejects g_c = 0 (the expression divides by g_c; use the Bloch solver
/// for the Lambda limit).
AnalyticValue rho23_full(const NormalizedPoint& point,
                         FormVariant variant = kDefaultVariant);

/// Strong-driving simplification (f(delta+) + f(delta-))/2, the sum of two
/// shifted Lambda-type lineshape elements. Regime: g_c >= 10 on top of the
/// rho23_full regime.
AnalyticValue rho23_approx(const NormalizedPoint& point,
                           FormVariant variant = kDefaultVariant);

/// Residual absorption at probe resonance, zeta*kappa^2*g_a /
/// (4 kappa^2 + (kappa^2-1)^2 g_a^2); independent of gamma_c.
/// Regime: kappa >= 1, g_a >= 1, zeta <= 0.1.
AnalyticReal im_rho23_resonant(double kappa, double zeta, double g_a);

/// Residual absorption inside a detuned transparency window
/// (delta_b = +-g_c/2); exactly linear in Gamma = gamma_c/gamma.
/// Regime additionally requires Gamma <= zeta.
AnalyticReal im_rho23_window(double kappa, double zeta, double g_a, double Gamma);

/// Height of the absorption peaks flanking a detuned window
/// (delta_b = +-(g_c +- g_a)/2). Same regime as im_rho23_window.
AnalyticReal im_rho23_peak(double kappa, double zeta, double g_a, double Gamma);

}  // namespace neit
