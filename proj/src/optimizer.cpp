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

#include "nonclass/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonclass/quasiprob.hpp"

namespace nonclass {
namespace {

constexpr int kMaxRecenters = 100000;

struct LatticeBest {
  int row = 0;
  int col = 0;
  PhasePoint point;
  double value = -1.0;
};

// Scans center + ((col - half) h, (row - half) h) for row, col in [0, 2 half].
LatticeBest scan(const FockState& state, PhasePoint center, double h, int half) {
  LatticeBest best;
  const int n = 2 * half + 1;
  for (int row = 0; row < n; ++row) {
    const double y = center.im + (row - half) * h;
    for (int col = 0; col < n; ++col) {
      const PhasePoint b{center.re + (col - half) * h, y};
      const double q = q_value(state, b);
      if (q > best.value) best = {row, col, b, q};
    }
  }
  return best;
}

void validate(const OptOptions& opts) {
  if (opts.window_radius && !(*opts.window_radius > 0.0))
    throw DomainError("window radius must be positive");
  if (opts.coarse_resolution < 3) throw DomainError("coarse resolution must be at least 3");
  if (!(opts.zoom_factor > 1.0)) throw DomainError("zoom factor must exceed 1");
  if (!(opts.target_step > 0.0)) throw DomainError("target step must be positive");
  if (opts.max_zoom_levels < 0) throw DomainError("max zoom levels must be non-negative");
}

}  // namespace

double default_window_radius(const FockState& state) {
  return 3.0 * std::sqrt(mean_photon(state)) + 5.0;
}

NonclassReport maximize_q(const FockState& state, const OptOptions& opts) {
  validate(opts);
  const double radius = opts.window_radius.value_or(default_window_radius(state));

  // Coarse pass over [-R, R]^2 with an even number of intervals per axis.
  const int coarse_half = opts.coarse_resolution / 2;
  const double coarse_step = radius / coarse_half;
  LatticeBest best = scan(state, PhasePoint{0.0, 0.0}, coarse_step, coarse_half);
  const int last = 2 * coarse_half;
  if (best.row == 0 || best.col == 0 || best.row == last || best.col == last)
    throw WindowError("Q maximum lies on the search window boundary (radius " +
                      std::to_string(radius) + "); increase the window radius");

  NonclassReport report;
  report.level_best.push_back(best.value);
  double step = coarse_step;
  const int half = static_cast<int>(std::ceil(2.0 * opts.zoom_factor));
  int level = 0;
  while (step > opts.target_step) {
    if (level == opts.max_zoom_levels)
      throw ConvergenceError("zoom refinement stopped at step " + std::to_string(step) +
                             " above the target " + std::to_string(opts.target_step));
    const double fine = step / opts.zoom_factor;
    PhasePoint center = best.point;
    LatticeBest local = scan(state, center, fine, half);
    for (int recenters = 0;; ++recenters) {
      const bool on_edge = local.row == 0 || local.col == 0 || local.row == 2 * half ||
                           local.col == 2 * half;
      if (!on_edge || local.value <= best.value) break;
      if (std::abs(local.point.re) >= radius || std::abs(local.point.im) >= radius)
        throw WindowError("Q maximum drifted to the search window boundary; increase the radius");
      if (recenters == kMaxRecenters)
        throw ConvergenceError("zoom lattice failed to settle on a local maximum");
      best = local;
      center = local.point;
      local = scan(state, center, fine, half);
    }
    if (local.value > best.value) best = local;
    step = fine;
    ++level;
    report.level_best.push_back(best.value);
  }

  report.beta_max = best.point;
  report.q_max = best.value;
  report.dq = std::clamp(1.0 - std::numbers::pi * best.value, 0.0, 1.0);
  report.final_step = step;
  report.boundary_hit = false;
  return report;
}

NonclassReport dq_numeric(const FockState& state, const OptOptions& opts,
                          std::optional<AnalyticValue> analytic) {
  NonclassReport report = maximize_q(state, opts);
  if (analytic) {
    report.analytic_dq = analytic->dq;
    report.analytic_source = analytic->source;
  }
  return report;
}

}  // namespace nonclass
