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

#include <array>
#include <cstddef>
#include <utility>

#include "neit/params.hpp"
#include "neit/types.hpp"

namespace neit {

/// The three radiative jump processes: |2>->|1> at gamma_a, |2>->|3> at
/// gamma_b, |4>->|3> at gamma_c. These induce the coherence dephasing
/// rates G12 = G23 = (ga+gb)/2, G13 = 0, G14 = G34 = gc/2,
/// G24 = (ga+gb+gc)/2.
struct DecayChannels {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double gamma_c = 0.0;

  static DecayChannels from(const SystemParams& params) {
    return {params.gamma_a, params.gamma_b, params.gamma_c};
  }

  /// (rate, jump operator) triples.
  std::array<std::pair<double, Mat4>, 3> jump_operators() const;

  /// Dephasing rate of the coherence rho_ij; levels are 1-based.
  double dephasing_rate(int i, int j) const;
};

/// Lindblad generator on the column-major vectorization of rho:
/// vec(rho)[i + 4j] = rho(i, j), so vec(A rho B) = (B^T kron A) vec(rho).
struct Liouvillian {
  SuperOp matrix = SuperOp::Zero();
  /// False when every decay rate vanishes; the kernel is then degenerate
  /// and steady_state refuses to pick a state.
  bool has_dissipation = false;
};

Liouvillian build_liouvillian(const SystemParams& params);

SuperVec vectorize(const Mat4& rho);
Mat4 unvectorize(const SuperVec& v);

/// 4x4 state with named accessors; physicality (Hermitian, unit trace,
/// positive semidefinite) is checked on demand, not on construction.
struct DensityMatrix {
  Mat4 matrix = Mat4::Zero();

  Complex rho23() const { return matrix(1, 2); }
  double population(int level) const { return matrix(level - 1, level - 1).real(); }

  /// diag(1) on the given 1-based level.
  static DensityMatrix pure(int level);
  static DensityMatrix maximally_mixed();

  double hermiticity_error() const;
  double trace_error() const;
  double min_eigenvalue() const;
  bool is_physical(double tol = 1e-9) const;
};

/// Unique unit-trace kernel vector of L, from an LU solve of the
/// trace-replaced linear system with one refinement pass (SVD fallback for
/// ill-conditioned cases). Throws when the kernel is degenerate or the
/// residual ||L vec(rho)|| cannot be brought below 1e-10.
DensityMatrix steady_state(const Liouvillian& liouvillian);

struct EvolveResult {
  DensityMatrix rho;
  bool converged = false;       // ||drho/dt||_F <= settle_tol reached
  double t_end = 0.0;
  double rhs_norm = 0.0;        // ||drho/dt||_F at t_end
  std::size_t steps = 0;        // accepted steps
  double max_trace_drift = 0.0; // max |tr rho - 1| along the trajectory
  double max_hermiticity_dev = 0.0;
};

/// Independent steady-state oracle: adaptive Dormand-Prince RK45 on
/// d vec(rho)/dt = L vec(rho) with absolute tolerance 1e-12, run until
/// ||drho/dt||_F <= settle_tol or t_max. Non-convergence is reported in
/// the result, never silently truncated.
EvolveResult evolve_to_steady(const SystemParams& params,
                              const DensityMatrix& rho0, double t_max,
                              double dt, double settle_tol = 1e-10);

/// drho/dt for a given state.
Mat4 lindblad_rhs(const Liouvillian& liouvillian, const Mat4& rho);

}  // namespace neit
