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
#include <optional>
#include <utility>

#include "neit/params.hpp"
#include "neit/types.hpp"

namespace neit {

/// Rotating-frame Hamiltonian: diagonal (delta_a, 0, delta_b,
/// delta_b - delta_c), couplings <1|H|2> = -omega_a/2, <3|H|2> = -omega_b/2,
/// <3|H|4> = -omega_c/2 plus conjugates. Rabi frequencies are taken real,
/// so the matrix is real symmetric (and Hermitian by construction).
Mat4 build_hamiltonian(const SystemParams& params);

/// Dark state of the probe/coupling Lambda subsystem:
/// cos(theta)|1> - sin(theta)|3> with theta = atan(omega_a/omega_b).
/// Rejects omega_a = omega_b = 0.
Vec4 lambda_dark_state(double omega_a, double omega_b);

struct MixingAngles {
  double theta1 = 0.0;  // lower-level (|1>,|3>) rotation
  double theta2 = 0.0;  // upper-level (|2>,|4>) rotation
};

/// Eigen-decomposition of the Hamiltonian at zero detunings. Mixing angles
/// are reported per state when the state splits its population evenly
/// between the lower and upper level pairs (every nonzero eigenvalue does).
struct Eigensystem {
  std::array<double, 4> eigenvalues{};             // ascending
  std::array<Vec4, 4> eigenvectors{};              // orthonormal
  std::array<std::optional<MixingAngles>, 4> mixing_angles{};
};

/// Requires delta_a = delta_b = delta_c = 0.
Eigensystem resonant_eigensystem(const SystemParams& params);

/// Relative residual of the resonant characteristic equation
/// (2l - Oa)(2l + Oa)(4l^2 - Ob^2 - Oc^2) = Oa^2 Ob^2 at l = lambda.
double resonant_quartic_residual(double lambda, double omega_a,
                                 double omega_b, double omega_c);

enum class Branch { plus, minus };

/// Probe detunings at which the Hamiltonian (delta_a = 0) acquires a zero
/// eigenvalue: the two roots of  db^2 - delta_c*db - omega_c^2/4 = 0,
/// returned as (plus, minus) with plus >= minus. Evaluated in a
/// cancellation-free form; at delta_c = 0 the pair is exactly
/// (+omega_c/2, -omega_c/2).
std::pair<double, double> dark_detunings(double delta_c, double omega_c);

/// Relative residual of the cubic satisfied by the three nonzero
/// eigenvalues at delta_c = 0, delta_b = +-omega_c/2:
/// 8 l^3 -+ 8 Oc l^2 - 2(Oa^2 + Ob^2) l +- (2 Oa^2 + Ob^2) Oc = 0.
double detuned_cubic_residual(double lambda, double omega_a, double omega_b,
                              double omega_c, Branch branch);

struct DarkState {
  double detuning = 0.0;       // probe detuning delta_b of this branch
  Vec4 state = Vec4::Zero();   // unit norm, |3> component real positive
  double level2_leakage = 0.0; // |<2|state>|
};

/// Null vector of the Hamiltonian with delta_b set to the dark detuning of
/// the chosen branch (params.delta_b is ignored). Requires delta_a = 0 and
/// omega_a > 0. Component ratios satisfy c1/c3 = -omega_b/omega_a and
/// c4/c3 = 2*delta_b/omega_c. With omega_c = 0 and a branch whose detuning
/// vanishes, the Lambda dark state is returned.
DarkState detuned_dark_state(const SystemParams& params, Branch branch);

struct DressedStates {
  double angle = 0.0;      // mixing angle; pi/4 at delta_c = 0
  double energy_3p = 0.0;  // probe resonance of |3'>, equals minus branch
  double energy_4p = 0.0;  // probe resonance of |4'>, equals plus branch
  Vec4 state_3p = Vec4::Zero();  // cos(angle)|3> - sin(angle)|4>
  Vec4 state_4p = Vec4::Zero();  // sin(angle)|3> + cos(angle)|4>
};

/// Basis rotation diagonalizing the |3>,|4> block under the driving field.
/// The angle satisfies |tan 2*angle| = omega_c/|delta_c| and is continuous
/// from angle -> 0 as omega_c -> 0 at delta_c > 0. The reported energies
/// are the probe detunings of the two dressed resonances and coincide with
/// dark_detunings(delta_c, omega_c). Rejects delta_c = omega_c = 0.
DressedStates dressed_states(double delta_c, double omega_c);

struct DarkStateReport {
  std::array<DarkState, 2> branches{};  // {plus, minus}
  double dressed_angle = 0.0;
};

/// Both dark-state branches plus the dressed-basis angle.
DarkStateReport dark_state_report(const SystemParams& params);

}  // namespace neit
