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

// Subcommand bodies of the `nonclass` tool. Each returns the process exit
// status and writes human-readable output to `out`, diagnostics to `err`.

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "nonclass/optimizer.hpp"
#include "nonclass/quasiprob.hpp"
#include "nonclass/state_spec.hpp"
#include "nonclass/sweep.hpp"

namespace nonclass::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitComputeError = 2,
  kExitIoError = 3,
  kExitUsage = 64,
};

struct DqArgs {
  std::string state;
  std::optional<int> cutoff;
  double tol = 1e-6;  // agreement tolerance between numeric and closed-form D_Q
  bool json = false;
  OptOptions opt;
};

struct GridArgs {
  std::string state;
  std::string what = "q";  // q | wigner
  std::optional<Window> window;  // default: square of the optimizer radius
  int resolution = 121;
  std::string out_path;
  std::optional<int> cutoff;
};

struct SweepArgs {
  SweepSpec sweep;
  bool numeric = false;
  std::string out_path;
};

// JSON object with exactly the keys state_spec, dq_numeric, analytic_dq,
// analytic_source, q_max, beta_max, final_step.
std::string report_json(const std::string& state_spec, const NonclassReport& report);

int cmd_dq(const DqArgs& args, std::ostream& out, std::ostream& err);
int cmd_grid(const GridArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(std::ostream& out);

}  // namespace nonclass::cli
