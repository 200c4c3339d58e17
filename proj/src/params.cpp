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

#include "neit/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace neit {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

void require_nonnegative(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0");
  }
}

}  // namespace

void SystemParams::validate() const {
  require_nonnegative(omega_a, "omega_a");
  require_nonnegative(omega_b, "omega_b");
  require_nonnegative(omega_c, "omega_c");
  require_finite(delta_a, "delta_a");
  require_finite(delta_b, "delta_b");
  require_finite(delta_c, "delta_c");
  require_nonnegative(gamma_a, "gamma_a");
  require_nonnegative(gamma_b, "gamma_b");
  require_nonnegative(gamma_c, "gamma_c");
}

}  // namespace neit
