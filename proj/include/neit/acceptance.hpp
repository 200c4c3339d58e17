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

#include <iosfwd>
#include <string>
#include <vector>

namespace neit {

struct CriterionResult {
  std::string id;      // c01..c11
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs expected
};

/// Runs the acceptance criteria matching `filter` ("all", a criterion id,
/// its name, or a scenario alias such as fig3/fig3_inset/fig5/collapse).
/// Throws std::invalid_argument for an unknown filter.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "all");

/// Prints one pass/fail line per criterion; returns the number of failures.
int print_acceptance(std::ostream& out, const std::string& filter = "all");

}  // namespace neit
