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

#pragma once

#include <Eigen/Core>

#include "nonclass/states.hpp"

namespace nonclass {

// Rectangular window in (Re beta, Im beta).
struct Window {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  static Window square(double half_width) {
    return {-half_width, half_width, -half_width, half_width};
  }
  static Window centered(PhasePoint center, double half_width) {
    return {center.re - half_width, center.re + half_width, center.im - half_width,
            center.im + half_width};
  }
};

// Cell-centered lattice of a quasi-probability. values(row, col) holds the
// sample at y = y_center(row), x = x_center(col).
struct QGrid {
  Window window;
  int resolution = 0;
  Eigen::MatrixXd values;

  double dx() const { return (window.x_max - window.x_min) / resolution; }
  double dy() const { return (window.y_max - window.y_min) / resolution; }
  double x_center(int col) const { return window.x_min + (col + 0.5) * dx(); }
  double y_center(int row) const { return window.y_min + (row + 0.5) * dy(); }
  // Midpoint-rule integral over the window.
  double integral() const { return values.sum() * dx() * dy(); }
};

struct WignerMinimum {
  PhasePoint location;
  double value = 0.0;
};

// Husimi Q(beta) = |<beta|Psi>|^2 / pi.
double q_value(const FockState& state, PhasePoint beta);

// Wigner function as displaced parity,
// W(beta) = (2/pi) sum_n (-1)^n |<n| D(-beta) |Psi>|^2.
// Throws AccuracyError when the displaced state is poorly resolved.
double wigner_value(const FockState& state, PhasePoint beta);

QGrid q_grid(const FockState& state, const Window& window, int resolution);
QGrid wigner_grid(const FockState& state, const Window& window, int resolution);

// Minimum lattice cell of the Wigner grid, then one zoom level at a tenth of
// the step over +-2 cells around it.
WignerMinimum wigner_min_scan(const FockState& state, const Window& window, int resolution);

}  // namespace nonclass
