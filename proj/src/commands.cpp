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

#include "nonclass/commands.hpp"

#include <cmath>

#include <json.hpp>

#include "nonclass/output.hpp"
#include "nonclass/verify.hpp"

namespace nonclass::cli {
namespace {

// Maps library exceptions onto exit codes. Bad user input is a usage error;
// anything the numerics reject is a computation error.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputeError;
  }
}

StateSpec parse_with_cutoff(const std::string& text, std::optional<int> cutoff) {
  StateSpec spec = parse_state_spec(text);
  spec.cutoff_override = cutoff;
  return spec;
}

}  // namespace

std::string report_json(const std::string& state_spec, const NonclassReport& report) {
  nlohmann::ordered_json j;
  j["state_spec"] = state_spec;
  j["dq_numeric"] = report.dq;
  j["analytic_dq"] = report.analytic_dq ? nlohmann::ordered_json(*report.analytic_dq) : nullptr;
  j["analytic_source"] =
      report.analytic_source ? nlohmann::ordered_json(*report.analytic_source) : nullptr;
  j["q_max"] = report.q_max;
  j["beta_max"] = {report.beta_max.re, report.beta_max.im};
  j["final_step"] = report.final_step;
  return j.dump(2);
}

int cmd_dq(const DqArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StateSpec spec = parse_with_cutoff(args.state, args.cutoff);
    const FockState state = build_state(spec);
    const NonclassReport report = dq_numeric(state, args.opt, analytic_reference(spec));
    const std::string text = render_state_spec(spec);
    if (args.json) {
      out << report_json(text, report) << '\n';
      return int(kExitOk);
    }
    out << "state        " << text << '\n'
        << "cutoff       " << state.cutoff() << '\n'
        << "dq_numeric   " << format_real(report.dq) << '\n'
        << "q_max        " << format_real(report.q_max) << '\n'
        << "beta_max     " << format_real(report.beta_max.re) << ' '
        << format_real(report.beta_max.im) << '\n'
        << "final_step   " << format_real(report.final_step) << '\n';
    if (report.analytic_dq) {
      const double diff = report.dq - *report.analytic_dq;
      out << "analytic_dq  " << format_real(*report.analytic_dq) << " (" << *report.analytic_source
          << ")\n"
          << "difference   " << format_real(diff) << '\n'
          << "agreement    " << (std::abs(diff) <= args.tol ? "yes" : "NO") << " (tol "
          << args.tol << ")\n";
    }
    return int(kExitOk);
  });
}

int cmd_grid(const GridArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.what != "q" && args.what != "wigner")
      throw DomainError("--what must be 'q' or 'wigner'");
    const StateSpec spec = parse_with_cutoff(args.state, args.cutoff);
    const FockState state = build_state(spec);
    const Window window = args.window.value_or(Window::square(default_window_radius(state)));
    const QGrid grid = args.what == "q" ? q_grid(state, window, args.resolution)
                                        : wigner_grid(state, window, args.resolution);
    write_file_atomic(args.out_path, grid_csv(grid));
    out << "wrote " << args.resolution * args.resolution << " samples of " << args.what << " to "
        << args.out_path << '\n';
    return int(kExitOk);
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_sweep(args.sweep, args.numeric);
    write_file_atomic(args.out_path, sweep_csv(rows));
    out << "wrote " << rows.size() << " rows to " << args.out_path << '\n';
    return int(kExitOk);
  });
}

int cmd_verify(std::ostream& out) {
  return print_verification(run_verification(), out) ? kExitOk : kExitVerifyFailed;
}

}  // namespace nonclass::cli
