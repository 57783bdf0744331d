// Copyright 2026 The fmqp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmqp/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "fmqp: fuzzy multi-objective quadratic programming solver\n"
      "Maximizes several convex quadratics over fuzzy linear and bound\n"
      "constraints via the max-min decision and a two-phase membership\n"
      "refinement, certified against a brute-force grid oracle."};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "run the full procedure");
  std::string instance_path;
  fmqp::PipelineOptions options;
  bool omit_timings = false;
  solve->add_option("file", instance_path, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--seed", options.seed, "RNG seed (default 1)");
  solve->add_option("--starts", options.starts,
                    "multistart count per phase (default 16)");
  solve->add_option("--grid", options.grid_resolution,
                    "oracle grid points per axis (default 401)");
  solve->add_option("--refine", options.refine_rounds,
                    "oracle refinement rounds (default 3)");
  solve->add_option("--report", options.report_path,
                    "write the JSON report here");
  solve->add_option("--curves", options.curves_dir,
                    "write membership curve CSVs into this directory");
  solve->add_flag("--oracle-only", options.oracle_only,
                  "skip local search; report grid-oracle results");
  solve->add_option("--tol-lambda", options.certify_slack,
                    "certification slack vs. the oracle (default 1e-4)");
  solve->add_option("--slice", options.curve_slice,
                    "ray direction for constraint curves (default diagonal)")
      ->delimiter(',');
  solve->add_flag("--omit-timings", omit_timings,
                  "null out timings in the JSON report (byte-stable reruns)");

  CLI11_PARSE(app, argc, argv);

  try {
    options.include_timings = !omit_timings;
    const fmqp::SolveReport report =
        fmqp::run_pipeline(instance_path, options);
    std::cout << fmqp::render_report_text(report);
    return fmqp::report_exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
