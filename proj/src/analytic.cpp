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

#include "neit/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace neit {

namespace {

constexpr Complex kI{0.0, 1.0};

// Lineshape building blocks shared by the full and simplified forms.
Complex a_term(double x, double g_c) {
  return -g_c * (1.0 + g_c * g_c) * (4.0 * x + kI);
}

Complex b_term(double x, double g_c) {
  return (1.0 - 2.0 * kI * x) * (1.0 - g_c * g_c);
}

Complex e_term(double x, double g_a) {
  return 1.0 - 2.0 * g_a * g_a +
         2.0 * (kI + 2.0 * x) * (2.0 * kI + 2.0 * x);
}

void check_point(const NormalizedPoint& p) {
  if (!std::isfinite(p.g_a) || !std::isfinite(p.g_b) || !std::isfinite(p.g_c) ||
      !std::isfinite(p.delta_b) || p.g_a < 0.0 || p.g_b < 0.0 || p.g_c < 0.0) {
    throw std::invalid_argument("NormalizedPoint: need finite entries and g_i >= 0");
  }
}

bool weak_probe_regime(const NormalizedPoint& p) {
  return p.g_a > 0.0 && p.g_b <= 0.1 * p.g_a;
}

}  // namespace

double NormalizedPoint::kappa() const {
  if (!(g_a > 0.0)) throw std::invalid_argument("kappa undefined for g_a <= 0");
  return g_c / g_a;
}

double NormalizedPoint::zeta() const {
  if (!(g_a > 0.0)) throw std::invalid_argument("zeta undefined for g_a <= 0");
  return g_b / g_a;
}

AnalyticValue rho23_full(const NormalizedPoint& point, FormVariant variant) {
  check_point(point);
  if (point.g_c == 0.0) {
    throw std::invalid_argument("rho23_full: g_c = 0 (expression divides by g_c)");
  }
  const double g_a = point.g_a;
  const double g_c = point.g_c;
  const double dp = point.delta_plus();
  const double dm = point.delta_minus();
  const Complex ep = e_term(dp, g_a);
  const Complex em = e_term(dm, g_a);

  const double pref = point.g_b / (2.0 * g_c * (1.0 + 2.0 * g_c * g_c));
  Complex numerator = (a_term(dp, g_c) + b_term(dp, g_c)) * em +
                      (a_term(dm, g_c) - b_term(dm, g_c)) * ep;
  Complex denominator = ep * em;
  if (variant == FormVariant::corrected) {
    numerator += ep - em;
    denominator += (ep - em) * (ep - em) / (16.0 * g_c * g_c);
  } else {
    numerator -= ep + em;
    denominator += 16.0 / (g_c * g_c) * (ep - em) * (ep - em);
  }

  AnalyticValue out;
  out.value = pref * numerator / denominator;
  out.in_regime = weak_probe_regime(point);
  return out;
}

AnalyticValue rho23_approx(const NormalizedPoint& point, FormVariant variant) {
  check_point(point);
  auto f = [&](double x) {
    const Complex numerator =
        variant == FormVariant::corrected
            ? kI + 4.0 * x            // shifted argument
            : kI + 4.0 * point.delta_b;
    return -0.5 * point.g_b * numerator / e_term(x, point.g_a);
  };
  AnalyticValue out;
  out.value = 0.5 * (f(point.delta_plus()) + f(point.delta_minus()));
  out.in_regime = weak_probe_regime(point) && point.g_c >= 10.0;
  return out;
}

AnalyticReal im_rho23_resonant(double kappa, double zeta, double g_a) {
  const double k2 = kappa * kappa;
  const double d = k2 - 1.0;
  AnalyticReal out;
  out.value = zeta * k2 * g_a / (4.0 * k2 + d * d * g_a * g_a);
  out.in_regime = kappa >= 1.0 && g_a >= 1.0 && zeta <= 0.1;
  return out;
}

AnalyticReal im_rho23_window(double kappa, double zeta, double g_a, double Gamma) {
  if (g_a == 0.0) {
    throw std::invalid_argument("im_rho23_window: g_a = 0 divides by zero");
  }
  const double k2 = kappa * kappa;
  const double q = 1.0 - 4.0 * k2;
  AnalyticReal out;
  out.value = Gamma * zeta *
              (12.0 * k2 + (1.0 - 3.0 * k2 + 4.0 * k2 * k2) * g_a * g_a) /
              (32.0 * k2 * g_a + 2.0 * q * q * g_a * g_a * g_a);
  out.in_regime = kappa >= 1.0 && g_a >= 1.0 && zeta <= 0.1 && Gamma <= zeta;
  return out;
}

AnalyticReal im_rho23_peak(double kappa, double zeta, double g_a, double Gamma) {
  if (g_a == 0.0) {
    throw std::invalid_argument("im_rho23_peak: g_a = 0 divides by zero");
  }
  const double kk = kappa + kappa * kappa;
  const double p = 1.0 + 2.0 * kappa;
  AnalyticReal out;
  out.value = Gamma * zeta *
              (2.0 * p * p + 4.0 * kk * kk * g_a * g_a) /
              (8.0 * kk * kk * g_a * (4.0 * Gamma + zeta * zeta * g_a * g_a));
  out.in_regime = kappa >= 1.0 && g_a >= 1.0 && zeta <= 0.1 && Gamma <= zeta;
  return out;
}

}  // namespace neit
