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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonclass/optimizer.hpp"

namespace nonclass {

enum class SweepFamily { pac, pasv, fock };
enum class XVariable { alpha_sq, mean_occupancy, p };

// pac: x = |alpha|^2; pasv: x = <n> of the input squeezed vacuum = sinh^2 r;
// fock: x = p, taking every integer in [x_min, x_max] (p_list and steps unused).
struct SweepSpec {
  SweepFamily family = SweepFamily::pac;
  std::vector<int> p_list;
  XVariable x_variable = XVariable::alpha_sq;
  double x_min = 0.0;
  double x_max = 1.0;
  int steps = 2;
};

struct SweepRow {
  double x;
  int p;
  double dq_analytic;
  std::optional<double> dq_numeric;
};

SweepFamily parse_sweep_family(std::string_view name);
XVariable natural_x_variable(SweepFamily family);

// Throws DomainError if the sweep violates its invariants.
void validate(const SweepSpec& sweep);

// Rows are ordered by p (in p_list order), then by increasing x.
std::vector<SweepRow> run_sweep(const SweepSpec& sweep, bool numeric, const OptOptions& opts = {});

// Header `x,p,dq_analytic,dq_numeric`; the numeric field is empty when absent.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace nonclass
