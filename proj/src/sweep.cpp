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

#include "nonclass/sweep.hpp"

#include <cmath>

#include "nonclass/output.hpp"
#include "nonclass/state_spec.hpp"

namespace nonclass {
namespace {

StateSpec spec_for(SweepFamily family, double x, int p) {
  switch (family) {
    case SweepFamily::pac:
      return {CoherentParams{std::sqrt(x), 0.0}, p, std::nullopt};
    case SweepFamily::pasv:
      return {SqueezedParams{std::asinh(std::sqrt(x)), 0.0}, p, std::nullopt};
    case SweepFamily::fock:
      break;
  }
  return {FockParams{p}, 0, std::nullopt};
}

}  // namespace

SweepFamily parse_sweep_family(std::string_view name) {
  if (name == "pac") return SweepFamily::pac;
  if (name == "pasv") return SweepFamily::pasv;
  if (name == "fock") return SweepFamily::fock;
  throw DomainError("unknown sweep family '" + std::string(name) + "'");
}

XVariable natural_x_variable(SweepFamily family) {
  switch (family) {
    case SweepFamily::pac:
      return XVariable::alpha_sq;
    case SweepFamily::pasv:
      return XVariable::mean_occupancy;
    case SweepFamily::fock:
      break;
  }
  return XVariable::p;
}

void validate(const SweepSpec& sweep) {
  if (sweep.x_variable != natural_x_variable(sweep.family))
    throw DomainError("x variable does not match the sweep family");
  if (!std::isfinite(sweep.x_min) || !std::isfinite(sweep.x_max) || sweep.x_min > sweep.x_max)
    throw DomainError("sweep range must satisfy x_min <= x_max");
  if (sweep.steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (sweep.family != SweepFamily::fock) {
    if (sweep.p_list.empty()) throw DomainError("photon list must be non-empty");
    if (sweep.x_min < 0.0) throw DomainError("sweep variable must be non-negative");
    for (int p : sweep.p_list)
      if (p < 0) throw DomainError("photon numbers must be non-negative");
  } else if (sweep.x_max < 0.0) {
    throw DomainError("fock sweep range holds no photon numbers");
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& sweep, bool numeric, const OptOptions& opts) {
  validate(sweep);
  std::vector<std::pair<double, int>> points;
  if (sweep.family == SweepFamily::fock) {
    const int lo = std::max(0, static_cast<int>(std::ceil(sweep.x_min)));
    const int hi = static_cast<int>(std::floor(sweep.x_max));
    for (int p = lo; p <= hi; ++p) points.emplace_back(double(p), p);
  } else {
    for (int p : sweep.p_list)
      for (int i = 0; i < sweep.steps; ++i) {
        const double x = i == sweep.steps - 1
                             ? sweep.x_max
                             : sweep.x_min + (sweep.x_max - sweep.x_min) * i / (sweep.steps - 1);
        points.emplace_back(x, p);
      }
  }

  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& [x, p] : points) {
    const StateSpec spec = spec_for(sweep.family, x, p);
    SweepRow row{x, p, analytic_reference(spec)->dq, std::nullopt};
    if (numeric) row.dq_numeric = dq_numeric(build_state(spec), opts).dq;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "x,p,dq_analytic,dq_numeric\n";
  for (const auto& row : rows) {
    out += format_real(row.x) + ',' + std::to_string(row.p) + ',' + format_real(row.dq_analytic) + ',';
    if (row.dq_numeric) out += format_real(*row.dq_numeric);
    out += '\n';
  }
  return out;
}

}  // namespace nonclass
