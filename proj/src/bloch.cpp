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

#include "neit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neit/atom.hpp"

namespace neit {

namespace {

SuperOp kron(const Mat4& a, const Mat4& b) {
  SuperOp out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

}  // namespace

std::array<std::pair<double, Mat4>, 3> DecayChannels::jump_operators() const {
  Mat4 ca = Mat4::Zero();  // |1><2|
  ca(0, 1) = 1.0;
  Mat4 cb = Mat4::Zero();  // |3><2|
  cb(2, 1) = 1.0;
  Mat4 cc = Mat4::Zero();  // |3><4|
  cc(2, 3) = 1.0;
  return {{{gamma_a, ca}, {gamma_b, cb}, {gamma_c, cc}}};
}

double DecayChannels::dephasing_rate(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
    throw std::invalid_argument("dephasing_rate: need distinct levels in 1..4");
  }
  // Half the total decay rate out of each level; levels 1 and 3 are stable.
  auto out_rate = [this](int level) {
    if (level == 2) return gamma_a + gamma_b;
    if (level == 4) return gamma_c;
    return 0.0;
  };
  return 0.5 * (out_rate(i) + out_rate(j));
}

Liouvillian build_liouvillian(const SystemParams& params) {
  params.validate();
  const Mat4 h = build_hamiltonian(params);
  const Mat4 id = Mat4::Identity();

  Liouvillian l;
  l.matrix = Complex(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));

  const DecayChannels channels = DecayChannels::from(params);
  for (const auto& [rate, c] : channels.jump_operators()) {
    if (rate == 0.0) continue;
    const Mat4 cdc = c.adjoint() * c;
    l.matrix += rate * (kron(c.conjugate(), c) - 0.5 * kron(id, cdc) -
                        0.5 * kron(cdc.transpose(), id));
  }
  l.has_dissipation =
      params.gamma_a > 0.0 || params.gamma_b > 0.0 || params.gamma_c > 0.0;
  return l;
}

SuperVec vectorize(const Mat4& rho) {
  SuperVec v;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) v[i + 4 * j] = rho(i, j);
  return v;
}

Mat4 unvectorize(const SuperVec& v) {
  Mat4 rho;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) rho(i, j) = v[i + 4 * j];
  return rho;
}

DensityMatrix DensityMatrix::pure(int level) {
  if (level < 1 || level > 4) throw std::invalid_argument("pure: level must be 1..4");
  DensityMatrix rho;
  rho.matrix(level - 1, level - 1) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed() {
  DensityMatrix rho;
  rho.matrix = 0.25 * Mat4::Identity();
  return rho;
}

double DensityMatrix::hermiticity_error() const {
  return (matrix - matrix.adjoint()).norm();
}

double DensityMatrix::trace_error() const {
  return std::abs(matrix.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(0.5 * (matrix + matrix.adjoint()));
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double tol) const {
  return hermiticity_error() <= tol && trace_error() <= tol &&
         min_eigenvalue() >= -tol;
}

namespace {

constexpr double kSteadyResidualTol = 1e-10;

double kernel_residual(const Liouvillian& l, const SuperVec& v) {
  return (l.matrix * v).norm();
}

DensityMatrix finalize_state(const SuperVec& v) {
  Mat4 rho = unvectorize(v);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (tr == 0.0 || !std::isfinite(tr)) {
    throw std::runtime_error("steady_state: kernel vector has vanishing trace");
  }
  rho /= tr;
  DensityMatrix out;
  out.matrix = rho;
  return out;
}

}  // namespace

DensityMatrix steady_state(const Liouvillian& liouvillian) {
  if (!liouvillian.has_dissipation) {
    throw std::runtime_error(
        "steady_state: no decay channel is active, the stationary manifold is degenerate");
  }

  // Replace the last scalar equation by the trace constraint tr(rho) = 1.
  SuperOp m = liouvillian.matrix;
  m.row(15).setZero();
  m(15, 0) = m(15, 5) = m(15, 10) = m(15, 15) = 1.0;
  SuperVec b = SuperVec::Zero();
  b[15] = 1.0;

  // Rank-revealing LU: a singular trace-replaced system means the kernel
  // of L is more than one-dimensional (an in-kernel junk component would
  // pass a plain residual check unnoticed).
  Eigen::FullPivLU<SuperOp> lu(m);
  SuperVec v;
  if (lu.isInvertible()) {
    v = lu.solve(b);
    v += lu.solve(b - m * v);  // one refinement pass
  }
  if (!lu.isInvertible() || kernel_residual(liouvillian, v) > kSteadyResidualTol) {
    // Diagnose via SVD: a second near-zero singular value means the kernel
    // is genuinely degenerate; otherwise fall back to the null vector.
    Eigen::JacobiSVD<SuperOp> svd(liouvillian.matrix, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv[0];
    if (sv[14] <= 1e-8 * scale) {
      throw std::runtime_error(
          "steady_state: Liouvillian kernel has dimension > 1 (degenerate steady-state manifold)");
    }
    v = svd.matrixV().col(15);
  }

  DensityMatrix rho = finalize_state(v);
  const double residual = kernel_residual(liouvillian, vectorize(rho.matrix));
  if (residual > kSteadyResidualTol) {
    throw std::runtime_error("steady_state: residual " + std::to_string(residual) +
                             " exceeds tolerance");
  }
  return rho;
}

Mat4 lindblad_rhs(const Liouvillian& liouvillian, const Mat4& rho) {
  return unvectorize(liouvillian.matrix * vectorize(rho));
}

EvolveResult evolve_to_steady(const SystemParams& params,
                              const DensityMatrix& rho0, double t_max,
                              double dt, double settle_tol) {
  if (!(t_max >= 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("evolve_to_steady: need t_max >= 0 and dt > 0");
  }
  const Liouvillian liouvillian = build_liouvillian(params);
  const SuperOp& l = liouvillian.matrix;

  // Dormand-Prince 5(4) coefficients.
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // 4th-order error weights (b - b_hat).
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  // Base per-step error budget; tightened near convergence, where the
  // steady accumulation of step errors would otherwise keep ||drho/dt||
  // floored just above the settle threshold.
  constexpr double kAbsTol = 1e-12;
  const double endgame_tol = std::max(1e-4 * settle_tol, 4.0e-16);

  EvolveResult result;
  SuperVec y = vectorize(rho0.matrix);
  double t = 0.0;
  double h = std::min(dt, t_max > 0.0 ? t_max : dt);

  SuperVec k1 = l * y;
  result.rhs_norm = k1.norm();
  auto track_invariants = [&result](const SuperVec& v) {
    const Mat4 rho = unvectorize(v);
    result.max_trace_drift = std::max(result.max_trace_drift,
                                      std::abs(rho.trace() - Complex(1.0, 0.0)));
    result.max_hermiticity_dev =
        std::max(result.max_hermiticity_dev, (rho - rho.adjoint()).norm());
  };
  track_invariants(y);

  while (result.rhs_norm > settle_tol && t < t_max) {
    h = std::min(h, t_max - t);
    const double tol =
        result.rhs_norm > 1e3 * settle_tol ? kAbsTol : endgame_tol;

    const SuperVec k2 = l * (y + h * a21 * k1);
    const SuperVec k3 = l * (y + h * (a31 * k1 + a32 * k2));
    const SuperVec k4 = l * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const SuperVec k5 = l * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const SuperVec k6 =
        l * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const SuperVec y_next =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const SuperVec k7 = l * y_next;
    const double err =
        (h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7))
            .cwiseAbs()
            .maxCoeff();

    if (err <= tol) {
      t += h;
      y = y_next;
      k1 = k7;  // FSAL
      result.rhs_norm = k1.norm();
      ++result.steps;
      track_invariants(y);
    }
    const double ratio = err > 0.0 ? std::pow(tol / err, 0.2) : 5.0;
    h *= std::clamp(0.9 * ratio, 0.2, 5.0);
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw std::runtime_error("evolve_to_steady: step size underflow");
    }
  }

  result.rho.matrix = unvectorize(y);
  result.converged = result.rhs_norm <= settle_tol;
  result.t_end = t;
  return result;
}

}  // namespace neit
