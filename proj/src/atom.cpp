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

#include "neit/atom.hpp"

#include <cmath>
#include <stdexcept>

namespace neit {

namespace {

// Rotate a numerically real eigenvector of the (real symmetric) Hamiltonian
// onto the real axis and return its real part.
Eigen::Vector4d realign(const Vec4& v) {
  int imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  Complex phase = v[imax] / std::abs(v[imax]);
  return (v * std::conj(phase)).real();
}

}  // namespace

Mat4 build_hamiltonian(const SystemParams& params) {
  params.validate();
  Mat4 h = Mat4::Zero();
  h(0, 0) = params.delta_a;
  h(2, 2) = params.delta_b;
  h(3, 3) = params.delta_b - params.delta_c;
  h(0, 1) = h(1, 0) = -0.5 * params.omega_a;
  h(2, 1) = h(1, 2) = -0.5 * params.omega_b;
  h(2, 3) = h(3, 2) = -0.5 * params.omega_c;
  return h;
}

Vec4 lambda_dark_state(double omega_a, double omega_b) {
  if (omega_a < 0.0 || omega_b < 0.0 || !std::isfinite(omega_a) ||
      !std::isfinite(omega_b)) {
    throw std::invalid_argument("lambda_dark_state: Rabi frequencies must be finite and >= 0");
  }
  if (omega_a == 0.0 && omega_b == 0.0) {
    throw std::invalid_argument("lambda_dark_state: omega_a = omega_b = 0 is degenerate");
  }
  const double theta = std::atan2(omega_a, omega_b);
  Vec4 v = Vec4::Zero();
  v[0] = std::cos(theta);
  v[2] = -std::sin(theta);
  return v;
}

Eigensystem resonant_eigensystem(const SystemParams& params) {
  params.validate();
  if (params.delta_a != 0.0 || params.delta_b != 0.0 || params.delta_c != 0.0) {
    throw std::invalid_argument("resonant_eigensystem requires all detunings zero");
  }
  const Mat4 h = build_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Mat4> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("resonant_eigensystem: eigen-decomposition failed");
  }

  Eigensystem sys;
  for (int i = 0; i < 4; ++i) {
    sys.eigenvalues[i] = solver.eigenvalues()[i];
    sys.eigenvectors[i] = solver.eigenvectors().col(i);

    // Mixing angles exist when the state splits half/half between the
    // lower pair (|1>,|3>) and the upper pair (|2>,|4>); that holds for
    // every nonzero eigenvalue because the resonant Hamiltonian only
    // couples the two pairs to each other.
    Eigen::Vector4d r = realign(sys.eigenvectors[i]);
    const double lower = r[0] * r[0] + r[2] * r[2];
    if (std::abs(lower - 0.5) > 1e-10) continue;

    // Components are (cos t1, cos t2, -sin t1, -sin t2)/sqrt(2) up to a
    // global sign; fix the sign so cos(t1) >= 0.
    if (r[0] < 0.0 || (r[0] == 0.0 && -r[2] < 0.0)) r = -r;
    MixingAngles ang;
    ang.theta1 = std::atan2(-r[2], r[0]);
    ang.theta2 = std::atan2(-r[3], r[1]);
    sys.mixing_angles[i] = ang;
  }
  return sys;
}

double resonant_quartic_residual(double lambda, double omega_a,
                                 double omega_b, double omega_c) {
  const double lhs = (2.0 * lambda - omega_a) * (2.0 * lambda + omega_a) *
                     (4.0 * lambda * lambda - omega_b * omega_b - omega_c * omega_c);
  const double rhs = omega_a * omega_a * omega_b * omega_b;
  const double scale = (4.0 * lambda * lambda + omega_a * omega_a) *
                           (4.0 * lambda * lambda + omega_b * omega_b +
                            omega_c * omega_c) +
                       rhs;
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
}

std::pair<double, double> dark_detunings(double delta_c, double omega_c) {
  if (!std::isfinite(delta_c) || !std::isfinite(omega_c) || omega_c < 0.0) {
    throw std::invalid_argument("dark_detunings: need finite delta_c and omega_c >= 0");
  }
  if (delta_c == 0.0) {
    return {0.5 * omega_c, -0.5 * omega_c};
  }
  // Roots of db^2 - delta_c*db - omega_c^2/4 = 0. The root on delta_c's
  // side is computed directly, the other via the product of roots
  // (-omega_c^2/4) to avoid cancellation at |delta_c| >> omega_c.
  const double s = std::hypot(delta_c, omega_c);
  if (delta_c > 0.0) {
    const double plus = 0.5 * (delta_c + s);
    const double minus = omega_c == 0.0 ? 0.0 : -(0.25 * omega_c * omega_c) / plus;
    return {plus, minus};
  }
  const double minus = 0.5 * (delta_c - s);
  const double plus = omega_c == 0.0 ? 0.0 : -(0.25 * omega_c * omega_c) / minus;
  return {plus, minus};
}

double detuned_cubic_residual(double lambda, double omega_a, double omega_b,
                              double omega_c, Branch branch) {
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const double oa2 = omega_a * omega_a;
  const double ob2 = omega_b * omega_b;
  const double l = lambda;
  const double value = 8.0 * l * l * l - sign * 8.0 * omega_c * l * l -
                       2.0 * (oa2 + ob2) * l + sign * (2.0 * oa2 + ob2) * omega_c;
  const double scale = 8.0 * std::abs(l * l * l) + 8.0 * omega_c * l * l +
                       2.0 * (oa2 + ob2) * std::abs(l) +
                       (2.0 * oa2 + ob2) * omega_c;
  return scale > 0.0 ? std::abs(value) / scale : std::abs(value);
}

DarkState detuned_dark_state(const SystemParams& params, Branch branch) {
  params.validate();
  if (params.delta_a != 0.0) {
    throw std::invalid_argument("detuned_dark_state requires delta_a = 0");
  }
  if (params.omega_a == 0.0) {
    throw std::invalid_argument("detuned_dark_state: omega_a = 0 leaves the component ratio undefined");
  }
  const auto [plus, minus] = dark_detunings(params.delta_c, params.omega_c);
  const double db = branch == Branch::plus ? plus : minus;

  DarkState out;
  out.detuning = db;

  if (params.omega_c == 0.0 && db == 0.0) {
    out.state = lambda_dark_state(params.omega_a, params.omega_b);
    out.level2_leakage = 0.0;
    return out;
  }

  SystemParams at_dark = params;
  at_dark.delta_b = db;
  const Mat4 h = build_hamiltonian(at_dark);
  Eigen::SelfAdjointEigenSolver<Mat4> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("detuned_dark_state: eigen-decomposition failed");
  }
  int k = 0;
  solver.eigenvalues().cwiseAbs().minCoeff(&k);
  Vec4 psi = solver.eigenvectors().col(k);

  // Phase convention: |3> component real positive; fall back to the largest
  // component when the state has no |3> weight.
  int ref = 2;
  if (std::abs(psi[2]) < 1e-12) psi.cwiseAbs().maxCoeff(&ref);
  psi *= std::conj(psi[ref] / std::abs(psi[ref]));

  out.state = psi;
  out.level2_leakage = std::abs(psi[1]);
  return out;
}

DressedStates dressed_states(double delta_c, double omega_c) {
  if (!std::isfinite(delta_c) || !std::isfinite(omega_c) || omega_c < 0.0) {
    throw std::invalid_argument("dressed_states: need finite delta_c and omega_c >= 0");
  }
  if (delta_c == 0.0 && omega_c == 0.0) {
    throw std::invalid_argument("dressed_states: angle undefined at delta_c = omega_c = 0");
  }
  DressedStates d;
  d.angle = 0.5 * std::atan2(omega_c, delta_c);
  const auto [plus, minus] = dark_detunings(delta_c, omega_c);
  d.energy_3p = minus;
  d.energy_4p = plus;
  const double c = std::cos(d.angle);
  const double s = std::sin(d.angle);
  d.state_3p[2] = c;
  d.state_3p[3] = -s;
  d.state_4p[2] = s;
  d.state_4p[3] = c;
  return d;
}

DarkStateReport dark_state_report(const SystemParams& params) {
  DarkStateReport report;
  report.branches[0] = detuned_dark_state(params, Branch::plus);
  report.branches[1] = detuned_dark_state(params, Branch::minus);
  report.dressed_angle = dressed_states(params.delta_c, params.omega_c).angle;
  return report;
}

}  // namespace neit
