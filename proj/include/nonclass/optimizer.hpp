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

// Deterministic phase-space maximization of the Husimi Q function.
//
// A coarse node lattice covers the square [-R, R]^2. The best node is then
// refined by zooming: a lattice of spacing step/zoom_factor spanning +-2
// coarse steps is centered on the current best node, and the procedure
// repeats until the spacing drops to target_step. If a zoom lattice peaks on
// its own edge it is re-centered at the same spacing before zooming further,
// which lets the search walk along narrow ridges the coarse lattice straddled.
// Ties go to the smallest (row, column) lattice index.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonclass/states.hpp"

namespace nonclass {

struct OptOptions {
  std::optional<double> window_radius;  // default 3 sqrt(<n>) + 5
  int coarse_resolution = 101;
  double zoom_factor = 10.0;
  double target_step = 1e-7;
  int max_zoom_levels = 10;
};

struct AnalyticValue {
  double dq;
  std::string source;
};

struct NonclassReport {
  PhasePoint beta_max;
  double q_max = 0.0;
  double dq = 0.0;
  double final_step = 0.0;
  bool boundary_hit = false;
  std::optional<double> analytic_dq;
  std::optional<std::string> analytic_source;
  std::vector<double> level_best;  // best Q after the coarse pass and each zoom level
};

double default_window_radius(const FockState& state);

// Throws WindowError when the coarse optimum touches the outer window and
// ConvergenceError when max_zoom_levels is exhausted.
NonclassReport maximize_q(const FockState& state, const OptOptions& opts = {});

// maximize_q plus D_Q = 1 - pi Q_max and, when given, the closed-form value.
NonclassReport dq_numeric(const FockState& state, const OptOptions& opts = {},
                          std::optional<AnalyticValue> analytic = std::nullopt);

}  // namespace nonclass
