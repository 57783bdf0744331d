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

#ifndef FMQP_SOLVER_HPP_
#define FMQP_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fmqp/crisp_qp.hpp"
#include "fmqp/instance.hpp"
#include "fmqp/membership.hpp"
#include "fmqp/polytope.hpp"

namespace fmqp {

/// Complete membership family of one instance: k objective grades, m
/// constraint grades, n upper and n lower bound grades. Flattened indexing
/// (objectives, constraints, upper, lower) is used for the max-min decision
/// and for binding-set labels.
struct MembershipSystem {
  std::vector<QuadraticObjective> objectives;
  std::vector<TrigObjectiveMf> objective_mfs;
  std::vector<TrigConstraintMf> constraint_mfs;
  std::vector<LinearBoundMf> upper_mfs;
  std::vector<LinearBoundMf> lower_mfs;
  Vector box_hi;  // u + t; default search box is [0, box_hi]

  Index dim() const { return box_hi.size(); }
  Index k() const { return static_cast<Index>(objective_mfs.size()); }
  Index m() const { return static_cast<Index>(constraint_mfs.size()); }
  Index size() const { return k() + m() + 2 * dim(); }

  double eval(Index flat, const Vector& x) const;
  void eval_all(const Vector& x, std::vector<double>& out) const;
  std::string label(Index flat) const;  // "objective_1", "constraint_2", ...
};

/// One membership per objective, row, and bound, parameterized straight from
/// the instance data and the aspiration intervals. A degenerate interval
/// yields a step-shaped objective grade.
MembershipSystem build_system(const FuzzyMoqpInstance& instance,
                              const std::vector<AspirationInterval>& intervals);

/// Max-min decision grade: minimum of all memberships at x (x >= 0).
double mu_D(const MembershipSystem& system, const Vector& x);

/// Brute-force certification grid: `resolution` points per axis over the box
/// ([0, u_j + t_j] when empty), then `refine_rounds` passes each shrinking
/// the box tenfold around the incumbent. Exhaustive certification at n <= 3;
/// a heuristic beyond that (the per-axis resolution is capped so a round
/// stays within a fixed evaluation budget).
struct GridOracleConfig {
  std::vector<std::pair<double, double>> box;  // empty = default
  int resolution = 401;
  int refine_rounds = 3;
  double certify_slack = 1e-4;  // max allowed shortfall vs. the oracle
  bool oracle_only = false;     // skip local methods, return oracle output
};

struct Phase1Result {
  double lambda_star = 0.0;
  Vector x_star;
  std::vector<std::string> binding;  // memberships equal to lambda_star (1e-6)
  double oracle_lambda = 0.0;
  Vector oracle_x;
  double bisection_lambda = 0.0;  // method (a) result, after polish
  double direct_lambda = 0.0;     // method (b) result
  bool certified = false;
};

struct Phase2Result {
  Vector x_eff;
  std::vector<double> mu_objectives;
  std::vector<double> mu_constraints;
  std::vector<double> mu_upper;
  std::vector<double> mu_lower;
  std::vector<double> objective_values;
  double sum_memberships = 0.0;
  double oracle_sum = 0.0;
  Vector oracle_x;
  bool certified = false;
  bool oracle_improved = false;  // oracle beat the local sum by > 1e-3
};

/// Max-min phase: maximizes mu_D over x >= 0. Runs (a) bisection on the
/// level with a vertex-seeded multistart feasibility search over the
/// inverted linear polytope, and (b) direct multistart ascent on mu_D, then
/// cross-checks the better of the two against the grid oracle. The result is
/// certified when it is within certify_slack of the oracle; otherwise the
/// oracle's point is returned uncertified. Throws SolveError(kInfeasible)
/// when the decision grade vanishes on the whole oracle grid.
Phase1Result solve_phase1(const MembershipSystem& system,
                          const GridOracleConfig& config, int starts,
                          std::uint64_t seed);

/// Membership-sum phase: maximizes the sum of all grades over the level set
/// {x >= 0 : every grade >= lambda_star - 1e-9}. The auxiliary variables of
/// the underlying program are eliminated exactly (each equals its clipped
/// grade at the optimum), leaving an n-variable search seeded at x_star, the
/// level polytope's vertices, and random level points; the grid oracle,
/// restricted to the level set, certifies the result. Throws
/// SolveError(kLevelSetEmpty) if even x_star fails the level test.
Phase2Result solve_phase2(const MembershipSystem& system,
                          const Phase1Result& phase1,
                          const GridOracleConfig& config, int starts,
                          std::uint64_t seed);

enum class Dominance { kEfficient, kDominated, kInconclusive };

struct EfficiencyVerdict {
  Dominance verdict = Dominance::kEfficient;
  Vector dominator;       // set when verdict != kEfficient
  double margin = 0.0;    // best strict improvement found
};

/// Fuzzy-efficiency certificate at grid resolution: searches for a point
/// that is at least as good in every objective value and every
/// constraint/bound grade (within 1e-9) and strictly better in one
/// (> 1e-6). kInconclusive reports a near-dominator whose best strict
/// improvement falls inside the (1e-9, 1e-6] tolerance gap.
EfficiencyVerdict check_fuzzy_efficiency(
    const MembershipSystem& system,
    const std::vector<QuadraticObjective>& objectives, const Vector& x_cand,
    const GridOracleConfig& config);

/// Crisp Pareto check over a polytope using objective values only.
/// x_cand must be feasible.
EfficiencyVerdict check_pareto(const std::vector<QuadraticObjective>& objectives,
                               const Polyhedron& polytope, const Vector& x_cand,
                               const GridOracleConfig& config);

/// Level polytope P(lambda): inverted constraint rows plus tightened bounds,
/// lower bounds clipped at 0. Shared by phase 1 feasibility tests and
/// phase 2 seeding. lambda in (0, 1].
Polyhedron level_polytope(const MembershipSystem& system, double lambda);

}  // namespace fmqp

#endif  // FMQP_SOLVER_HPP_
