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

#include "nonclass/quasiprob.hpp"

#include <cmath>
#include <numbers>

namespace nonclass {
namespace {

void check_grid_args(const Window& window, int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  if (!(window.x_max > window.x_min) || !(window.y_max > window.y_min))
    throw DomainError("grid window is degenerate");
}

template <typename Eval>
QGrid sample(const Window& window, int resolution, Eval eval) {
  check_grid_args(window, resolution);
  QGrid grid{window, resolution, Eigen::MatrixXd(resolution, resolution)};
  for (int row = 0; row < resolution; ++row)
    for (int col = 0; col < resolution; ++col)
      grid.values(row, col) = eval(PhasePoint{grid.x_center(col), grid.y_center(row)});
  return grid;
}

}  // namespace

double q_value(const FockState& state, PhasePoint beta) {
  return std::norm(coherent_overlap(state, beta.value())) / std::numbers::pi;
}

double wigner_value(const FockState& state, PhasePoint beta) {
  const FockState shifted = displace(state, -beta.value());
  const auto& c = shifted.amplitudes();
  double even = 0.0;
  double odd = 0.0;
  for (int n = 0; n <= shifted.cutoff(); ++n) (n % 2 == 0 ? even : odd) += std::norm(c(n));
  return 2.0 / std::numbers::pi * (even - odd);
}

QGrid q_grid(const FockState& state, const Window& window, int resolution) {
  return sample(window, resolution, [&](PhasePoint b) { return q_value(state, b); });
}

QGrid wigner_grid(const FockState& state, const Window& window, int resolution) {
  return sample(window, resolution, [&](PhasePoint b) { return wigner_value(state, b); });
}

WignerMinimum wigner_min_scan(const FockState& state, const Window& window, int resolution) {
  const QGrid coarse = wigner_grid(state, window, resolution);
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  double best = coarse.values.minCoeff(&row, &col);
  PhasePoint where{coarse.x_center(static_cast<int>(col)), coarse.y_center(static_cast<int>(row))};

  // Node lattice at a tenth of the coarse step, centered on the coarse cell.
  constexpr int kHalf = 20;
  const double hx = coarse.dx() / 10.0;
  const double hy = coarse.dy() / 10.0;
  const PhasePoint center = where;
  for (int i = -kHalf; i <= kHalf; ++i) {
    for (int j = -kHalf; j <= kHalf; ++j) {
      const PhasePoint b{center.re + j * hx, center.im + i * hy};
      const double w = wigner_value(state, b);
      if (w < best) {
        best = w;
        where = b;
      }
    }
  }
  return {where, best};
}

}  // namespace nonclass
