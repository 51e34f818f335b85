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

#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "nonclass/commands.hpp"

using namespace nonclass;

int main(int argc, char** argv) {
  CLI::App app{"Geometric non-classicality of pure single-mode states"};
  app.require_subcommand(1);

  cli::DqArgs dq;
  std::optional<int> dq_cutoff;
  auto* dq_cmd = app.add_subcommand("dq", "Compute D_Q = 1 - pi max Q for a state");
  dq_cmd->add_option("--state", dq.state, "State, e.g. coherent:re=2,im=2+add=1")->required();
  dq_cmd->add_option("--cutoff", dq_cutoff, "Fock cutoff override");
  dq_cmd->add_option("--tol", dq.tol, "Agreement tolerance against the closed form");
  dq_cmd->add_flag("--json", dq.json, "Emit a JSON report");
  dq_cmd->add_option("--radius", dq.opt.window_radius, "Search window radius");
  dq_cmd->add_option("--resolution", dq.opt.coarse_resolution, "Coarse lattice points per axis");
  dq_cmd->add_option("--target-step", dq.opt.target_step, "Final lattice spacing");

  cli::GridArgs grid;
  std::optional<int> grid_cutoff;
  std::vector<double> window;
  auto* grid_cmd = app.add_subcommand("grid", "Sample Q or Wigner on a cell-centered lattice");
  grid_cmd->add_option("--state", grid.state, "State specification")->required();
  grid_cmd->add_option("--what", grid.what, "q or wigner")->check(CLI::IsMember({"q", "wigner"}));
  grid_cmd->add_option("--window", window, "x_min x_max y_min y_max")->expected(4);
  grid_cmd->add_option("--res", grid.resolution, "Cells per axis");
  grid_cmd->add_option("--out", grid.out_path, "Output CSV path")->required();
  grid_cmd->add_option("--cutoff", grid_cutoff, "Fock cutoff override");

  cli::SweepArgs sweep;
  std::string family = "pac";
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate D_Q curves");
  sweep_cmd->add_option("--family", family, "pac, pasv or fock")
      ->check(CLI::IsMember({"pac", "pasv", "fock"}));
  sweep_cmd->add_option("--p", sweep.sweep.p_list, "Added photon numbers")->delimiter(',');
  sweep_cmd->add_option("--x-min", sweep.sweep.x_min, "Lower end of the x range");
  sweep_cmd->add_option("--x-max", sweep.sweep.x_max, "Upper end of the x range");
  sweep_cmd->add_option("--steps", sweep.sweep.steps, "Samples per curve");
  sweep_cmd->add_flag("--numeric", sweep.numeric, "Also run the numeric optimizer");
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (*dq_cmd) {
    dq.cutoff = dq_cutoff;
    return cli::cmd_dq(dq, std::cout, std::cerr);
  }
  if (*grid_cmd) {
    grid.cutoff = grid_cutoff;
    if (!window.empty()) grid.window = Window{window[0], window[1], window[2], window[3]};
    return cli::cmd_grid(grid, std::cout, std::cerr);
  }
  if (*sweep_cmd) {
    sweep.sweep.family = parse_sweep_family(family);
    sweep.sweep.x_variable = natural_x_variable(sweep.sweep.family);
    return cli::cmd_sweep(sweep, std::cout, std::cerr);
  }
  if (*verify_cmd) return cli::cmd_verify(std::cout);
  return cli::kExitUsage;
}
