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

#ifndef FMQP_REPORT_HPP_
#define FMQP_REPORT_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fmqp/solver.hpp"

namespace fmqp {

struct PipelineOptions {
  std::uint64_t seed = 1;
  int starts = 16;
  int grid_resolution = 401;
  int refine_rounds = 3;
  double certify_slack = 1e-4;
  bool oracle_only = false;
  bool include_timings = true;
  std::string report_path;          // empty = don't write
  std::string curves_dir;           // empty = don't write
  std::vector<double> curve_slice;  // empty = diagonal ray
};

struct StepTimings {
  double validate_ms = 0.0;
  double crisp_ms = 0.0;
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
  double efficiency_ms = 0.0;
};

/// End-to-end record of one solve. Numbers are stored exactly as the modules
/// produced them; rendering rounds only in the human-readable view.
struct SolveReport {
  std::string instance_path;
  Index n = 0, k = 0, m = 0;
  std::string digest;
  std::vector<std::array<CrispOptimum, 4>> crisp_optima;  // per objective
  std::vector<AspirationInterval> aspiration;
  Phase1Result phase1;
  Phase2Result phase2;
  EfficiencyVerdict efficiency;
  GridOracleConfig oracle;
  int starts = 0;
  std::uint64_t seed = 0;
  StepTimings timings;
  std::vector<std::string> warnings;

  bool certified() const { return phase1.certified && phase2.certified; }
};

/// Runs the whole procedure: validate, solve the four crisp variants per
/// objective, build the membership system, run both phases, and certify
/// fuzzy efficiency. Writes the JSON report and curve CSVs when requested.
/// Throws std::runtime_error on parse/validation failures and SolveError on
/// solver failures.
SolveReport run_pipeline(const std::filesystem::path& instance_path,
                         const PipelineOptions& options);

/// JSON rendering with fixed key order and 17-significant-digit reals.
/// With include_timings false the timings field is null, which makes
/// seeded reruns byte-identical.
std::string render_report_json(const SolveReport& report,
                               bool include_timings);

/// Plain-text summary table.
std::string render_report_text(const SolveReport& report);

/// One CSV per membership function: objective grades over the aspiration
/// interval widened by 10%, constraint grades along a ray scaled to the
/// search box, bound grades over anchor +/- 2 tol. 401 samples, header
/// "input,value", LF endings, 17-significant-digit decimals.
void emit_curves(const MembershipSystem& system,
                 const std::filesystem::path& dir,
                 const std::vector<double>& slice_dir = {});

/// 0 when both phases certified, 2 otherwise (errors exit 1 at the CLI).
int report_exit_code(const SolveReport& report);

}  // namespace fmqp

#endif  // FMQP_REPORT_HPP_
