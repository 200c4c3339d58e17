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

namespace neit {

/// Drive and damping parameters of the four-level N system, all expressed
/// in units of a reference damping rate gamma (hbar = 1).
///
/// Couplings: omega_a drives |1>-|2|, omega_b drives |3>-|2> (the probe),
/// omega_c drives |3>-|4>. Decays: gamma_a is |2>->|1>, gamma_b is
/// |2>->|3>, gamma_c is |4>->|3>.
struct SystemParams {
  double omega_a = 0.0;
  double omega_b = 0.0;
  double omega_c = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double delta_c = 0.0;
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  double gamma_c = 1.0;

  /// Throws std::invalid_argument naming the offending field when a Rabi
  /// frequency or damping rate is negative, or when any entry is non-finite.
  void validate() const;
};

}  // namespace neit
