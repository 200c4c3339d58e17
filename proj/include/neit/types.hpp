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

#include <Eigen/Dense>
#include <complex>

namespace neit {

using Complex = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using SuperOp = Eigen::Matrix<Complex, 16, 16>;
using SuperVec = Eigen::Matrix<Complex, 16, 1>;

// Level labels |1>..|4> map to indices 0..3. |1>, |3> are ground levels,
// |2>, |4> are excited.
inline constexpr int kLevels = 4;

}  // namespace neit
