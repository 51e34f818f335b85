// Copyright 2026 The nonclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks: every closed form against the truncated
// Fock-space pipeline, plus the invariance, negativity and normalization
// properties. Shared by `nonclass verify` and the acceptance test binary.

#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "nonclass/states.hpp"

namespace nonclass {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Injection point for mutation testing of the suite itself.
struct VerifyHooks {
  std::function<FockState(double r, double phi, int reserve_photons)> squeezed_vacuum =
      [](double r, double phi, int reserve) {
        return make_squeezed_vacuum<double>(r, phi, std::nullopt, reserve);
      };
};

std::vector<CheckResult> run_verification(const VerifyHooks& hooks = {});

// One PASS/FAIL line per check; returns true iff all passed.
bool print_verification(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace nonclass
