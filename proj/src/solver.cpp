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

#include "fmqp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace fmqp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLevelPad = 1e-9;      // slack below lambda* in phase 2
constexpr double kBindingTol = 1e-6;    // membership == lambda* detection
constexpr double kBisectTol = 1e-6;     // phase-1 level resolution
constexpr double kAscentStepMin = 1e-9;
constexpr double kAscentVerifyStep = 1e-7;
constexpr double kWeakDomTol = 1e-9;    // "no worse" slack in dominance
constexpr double kStrictDomTol = 1e-6;  // "strictly better" threshold
constexpr double kDiscrepancyTol = 1e-3;

// Caps one grid round; keeps n <= 3 exhaustive at the default resolution.
constexpr double kGridRoundBudget = 7.0e7;

using Box = std::vector<std::pair<double, double>>;

Box default_box(const MembershipSystem& system) {
  Box box(system.dim());
  for (Index j = 0; j < system.dim(); ++j) box[j] = {0.0, system.box_hi[j]};
  return box;
}

double box_span(const Box& box) {
  double w = 0.0;
  for (const auto& [lo, hi] : box) w = std::max(w, hi - lo);
  return w;
}

int effective_resolution(int resolution, Index n) {
  int res = std::max(2, resolution);
  while (res > 2 && std::pow(static_cast<double>(res),
                             static_cast<double>(n)) > kGridRoundBudget) {
    res = std::max(2, res / 2);
  }
  return res;
}

// Deterministic scan of every grid node in lexicographic order.
template <class Fn>
void for_each_grid_node(const Box& box, int res, Fn&& fn) {
  const Index n = static_cast<Index>(box.size());
  std::vector<int> idx(n, 0);
  Vector x(n);
  while (true) {
    for (Index j = 0; j < n; ++j) {
      const auto& [lo, hi] = box[j];
      x[j] = lo + (hi - lo) * idx[j] / (res - 1);
    }
    fn(x);
    Index j = n;
    while (j > 0) {
      --j;
      if (++idx[j] < res) break;
      idx[j] = 0;
      if (j == 0) return;
    }
  }
}

Box shrink_box(const Box& original, const Box& current, const Vector& center) {
  Box next(original.size());
  for (std::size_t j = 0; j < original.size(); ++j) {
    const double w = (current[j].second - current[j].first) / 10.0;
    double lo = std::max(original[j].first, center[j] - w / 2.0);
    double hi = std::min(original[j].second, center[j] + w / 2.0);
    if (hi < lo) hi = lo;
    next[j] = {lo, hi};
  }
  return next;
}

struct GridResult {
  double value = -kInf;
  Vector x;
};

// Multi-round refining grid maximization. The optional seed point joins the
// incumbent before the first round so refinement can zero in on it even when
// no grid node scores (thin feasible sets).
template <class F>
GridResult grid_search(F&& f, const Box& box, int resolution, int rounds,
                       const Vector* seed_point) {
  const Index n = static_cast<Index>(box.size());
  const int res = effective_resolution(resolution, n);
  GridResult best;
  if (seed_point != nullptr) {
    best.value = f(*seed_point);
    best.x = *seed_point;
  }
  Box cur = box;
  for (int round = 0; round <= rounds; ++round) {
    for_each_grid_node(cur, res, [&](const Vector& x) {
      const double v = f(x);
      if (v > best.value ||
          (v == best.value && best.x.size() > 0 && lex_less(x, best.x))) {
        best.value = v;
        best.x = x;
      }
    });
    if (best.x.size() == 0) break;  // nothing scored anywhere
    cur = shrink_box(box, cur, best.x);
  }
  return best;
}

std::vector<Vector> build_directions(Index n, std::mt19937_64& rng) {
  std::vector<Vector> dirs;
  for (Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    dirs.push_back(e);
    dirs.push_back(-e);
  }
  if (n <= 4) {
    // All diagonal sign patterns; catches min-kink directions that axis
    // steps stall on.
    const int combos = 1 << n;
    for (int mask = 0; mask < combos; ++mask) {
      Vector d(n);
      for (Index j = 0; j < n; ++j) d[j] = (mask >> j) & 1 ? 1.0 : -1.0;
      dirs.push_back(d / d.norm());
    }
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Index extra = 0; extra < 2 * n; ++extra) {
      Vector d(n);
      for (Index j = 0; j < n; ++j) d[j] = gauss(rng);
      const double norm = d.norm();
      if (norm > 1e-12) dirs.push_back(d / norm);
    }
  }
  return dirs;
}

// Compass ascent with clipping at x >= 0; f returns -inf to reject a point.
// Deterministic given the start. Converges to a point no coordinate-pattern
// step of kAscentVerifyStep improves.
template <class F>
Vector pattern_ascent(F&& f, Vector x, double step0,
                      const std::vector<Vector>& dirs, double* value_out) {
  double fx = f(x);
  for (int restart = 0; restart < 64; ++restart) {
    double step = step0;
    while (step >= kAscentStepMin) {
      double best_v = fx;
      Vector best_x;
      bool found = false;
      for (const Vector& d : dirs) {
        const Vector y = (x + step * d).cwiseMax(0.0);
        const double fy = f(y);
        if (fy > best_v || (found && fy == best_v && lex_less(y, best_x))) {
          best_v = fy;
          best_x = y;
          found = true;
        }
      }
      if (found) {
        x = best_x;
        fx = best_v;
      } else {
        step *= 0.5;
      }
    }
    bool improved = false;
    for (const Vector& d : dirs) {
      const Vector y = (x + kAscentVerifyStep * d).cwiseMax(0.0);
      const double fy = f(y);
      if (fy > fx) {
        x = y;
        fx = fy;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    step0 = 16.0 * kAscentVerifyStep;
  }
  if (value_out != nullptr) *value_out = fx;
  return x;
}

std::vector<std::string> binding_set(const MembershipSystem& system,
                                     const Vector& x, double lambda_star) {
  std::vector<std::string> out;
  std::vector<double> mu;
  system.eval_all(x, mu);
  for (Index i = 0; i < system.size(); ++i) {
    if (std::abs(mu[i] - lambda_star) <= kBindingTol) {
      out.push_back(system.label(i));
    }
  }
  return out;
}

// Feasibility of level lambda: does some x in P(lambda) clear every
// objective threshold? Seeds are the polytope's vertices plus random convex
// combinations of them.
bool level_feasible(const MembershipSystem& system, double lambda, int starts,
                    std::mt19937_64& rng, const std::vector<Vector>& dirs,
                    double step0, Vector* witness) {
  const Polyhedron poly = level_polytope(system, lambda);
  const std::vector<Vertex> vertices = poly.enumerate_vertices();
  if (vertices.empty()) return false;

  std::vector<double> thresholds(system.k());
  for (Index q = 0; q < system.k(); ++q) {
    thresholds[q] = system.objective_mfs[q].invert_level(lambda);
  }
  auto gap = [&](const Vector& x) {
    double g = kInf;
    for (Index q = 0; q < system.k(); ++q) {
      g = std::min(g, system.objectives[q].value(x) - thresholds[q]);
    }
    return g;
  };

  constexpr double kGapTol = -1e-12;
  bool feasible = false;
  Vector best_x;
  double best_gap = -kInf;
  auto consider = [&](const Vector& x, double g) {
    if (g >= kGapTol) {
      if (!feasible || lex_less(x, best_x)) {
        best_x = x;
        feasible = true;
      }
    } else if (!feasible && g > best_gap) {
      best_gap = g;
      best_x = x;
    }
  };

  for (const Vertex& v : vertices) consider(v.x, gap(v.x));

  std::vector<Vector> seeds;
  std::exponential_distribution<double> expo(1.0);
  for (int i = 0; i < starts; ++i) {
    Vector w(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) w[v] = expo(rng);
    w /= w.sum();
    Vector x = Vector::Zero(poly.dim());
    for (std::size_t v = 0; v < vertices.size(); ++v) x += w[v] * vertices[v].x;
    seeds.push_back(std::move(x));
  }
  if (!feasible) {
    auto constrained_gap = [&](const Vector& x) {
      return poly.contains(x, kFeasTol) ? gap(x) : -kInf;
    };
    for (const Vertex& v : vertices) {
      double g = 0.0;
      const Vector x = pattern_ascent(constrained_gap, v.x, step0, dirs, &g);
      consider(x, g);
      if (feasible) break;
    }
    for (const Vector& s : seeds) {
      if (feasible) break;
      double g = 0.0;
      const Vector x = pattern_ascent(constrained_gap, s, step0, dirs, &g);
      consider(x, g);
    }
  }
  if (feasible && witness != nullptr) *witness = best_x;
  return feasible;
}

// Criterion vector of the fuzzy-efficiency order: raw objective values
// followed by constraint and bound grades.
void efficiency_criteria(const MembershipSystem& system, const Vector& x,
                         std::vector<double>& out) {
  out.clear();
  for (const auto& obj : system.objectives) out.push_back(obj.value(x));
  for (const auto& mf : system.constraint_mfs) out.push_back(mf.eval(x));
  for (Index j = 0; j < system.dim(); ++j) {
    out.push_back(system.upper_mfs[j].eval(x[j]));
  }
  for (Index j = 0; j < system.dim(); ++j) {
    out.push_back(system.lower_mfs[j].eval(x[j]));
  }
}

// Shared dominance scan: criteria(y, out) fills the criterion vector,
// admit(y) filters candidates. Returns the best weak dominator's strict
// margin together with the point.
template <class Criteria, class Admit>
EfficiencyVerdict dominance_scan(const Vector& x_cand, const Box& box,
                                 int resolution, int rounds,
                                 Criteria&& criteria, Admit&& admit) {
  std::vector<double> base;
  criteria(x_cand, base);

  const int res =
      effective_resolution(resolution, static_cast<Index>(box.size()));
  double best_margin = -kInf;
  Vector best_dom;
  double best_near = -kInf;
  Vector best_near_x;
  std::vector<double> crit;

  auto visit = [&](const Vector& y) {
    if (!admit(y)) return;
    criteria(y, crit);
    double min_gap = kInf;
    double max_gap = -kInf;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double gap = crit[i] - base[i];
      min_gap = std::min(min_gap, gap);
      max_gap = std::max(max_gap, gap);
    }
    if (min_gap >= -kWeakDomTol) {
      if (max_gap > best_margin ||
          (max_gap == best_margin && best_dom.size() > 0 &&
           lex_less(y, best_dom))) {
        best_margin = max_gap;
        best_dom = y;
      }
    }
    if (min_gap > best_near) {
      best_near = min_gap;
      best_near_x = y;
    }
  };

  Box cur = box;
  for (int round = 0; round <= rounds; ++round) {
    for_each_grid_node(cur, res, visit);
    const Vector* anchor =
        best_dom.size() > 0 ? &best_dom
                            : (best_near_x.size() > 0 ? &best_near_x : nullptr);
    if (anchor == nullptr) break;
    cur = shrink_box(box, cur, *anchor);
  }

  EfficiencyVerdict verdict;
  verdict.margin = best_margin > -kInf ? best_margin : 0.0;
  if (best_margin > kStrictDomTol) {
    verdict.verdict = Dominance::kDominated;
    verdict.dominator = best_dom;
  } else if (best_margin > kWeakDomTol) {
    verdict.verdict = Dominance::kInconclusive;
    verdict.dominator = best_dom;
  } else {
    verdict.verdict = Dominance::kEfficient;
  }
  return verdict;
}

}  // namespace

double MembershipSystem::eval(Index flat, const Vector& x) const {
  const Index n = dim();
  if (flat < k()) return objective_mfs[flat].eval(objectives[flat].value(x));
  flat -= k();
  if (flat < m()) return constraint_mfs[flat].eval(x);
  flat -= m();
  if (flat < n) return upper_mfs[flat].eval(x[flat]);
  flat -= n;
  return lower_mfs[flat].eval(x[flat]);
}

void MembershipSystem::eval_all(const Vector& x, std::vector<double>& out) const {
  out.clear();
  out.reserve(size());
  for (Index q = 0; q < k(); ++q) {
    out.push_back(objective_mfs[q].eval(objectives[q].value(x)));
  }
  for (Index i = 0; i < m(); ++i) out.push_back(constraint_mfs[i].eval(x));
  for (Index j = 0; j < dim(); ++j) out.push_back(upper_mfs[j].eval(x[j]));
  for (Index j = 0; j < dim(); ++j) out.push_back(lower_mfs[j].eval(x[j]));
}

std::string MembershipSystem::label(Index flat) const {
  if (flat < k()) return "objective_" + std::to_string(flat + 1);
  flat -= k();
  if (flat < m()) return "constraint_" + std::to_string(flat + 1);
  flat -= m();
  if (flat < dim()) return "upper_bound_" + std::to_string(flat + 1);
  flat -= dim();
  return "lower_bound_" + std::to_string(flat + 1);
}

MembershipSystem build_system(const FuzzyMoqpInstance& instance,
                              const std::vector<AspirationInterval>& intervals) {
  if (static_cast<Index>(intervals.size()) != instance.k()) {
    throw std::invalid_argument("one aspiration interval per objective required");
  }
  MembershipSystem system;
  system.objectives = instance.objectives;
  for (const auto& interval : intervals) {
    system.objective_mfs.emplace_back(interval.lo, interval.hi);
  }
  for (const auto& row : instance.rows) {
    system.constraint_mfs.emplace_back(row.a, row.d, row.b, row.p);
  }
  for (Index j = 0; j < instance.n; ++j) {
    system.upper_mfs.emplace_back(BoundKind::kUpper, instance.bounds.u[j],
                                  instance.bounds.t[j]);
    system.lower_mfs.emplace_back(BoundKind::kLower, instance.bounds.l[j],
                                  instance.bounds.r[j]);
  }
  system.box_hi = instance.bounds.u + instance.bounds.t;
  return system;
}

double mu_D(const MembershipSystem& system, const Vector& x) {
  double m = 1.0;
  for (Index q = 0; q < system.k() && m > 0.0; ++q) {
    m = std::min(m, system.objective_mfs[q].eval(system.objectives[q].value(x)));
  }
  for (Index i = 0; i < system.m() && m > 0.0; ++i) {
    m = std::min(m, system.constraint_mfs[i].eval(x));
  }
  for (Index j = 0; j < system.dim() && m > 0.0; ++j) {
    m = std::min(m, system.upper_mfs[j].eval(x[j]));
  }
  for (Index j = 0; j < system.dim() && m > 0.0; ++j) {
    m = std::min(m, system.lower_mfs[j].eval(x[j]));
  }
  return m;
}

Polyhedron level_polytope(const MembershipSystem& system, double lambda) {
  const Index n = system.dim();
  const Index m = system.m();
  Matrix A(m, n);
  Vector rhs(m);
  for (Index i = 0; i < m; ++i) {
    const LinearRow row = system.constraint_mfs[i].invert_level(lambda);
    A.row(i) = row.coeffs;
    rhs[i] = row.rhs;
  }
  Vector lo(n), hi(n);
  for (Index j = 0; j < n; ++j) {
    hi[j] = system.upper_mfs[j].invert_level(lambda);
    lo[j] = std::max(0.0, system.lower_mfs[j].invert_level(lambda));
  }
  return Polyhedron::from_bounds(A, rhs, lo, hi);
}

Phase1Result solve_phase1(const MembershipSystem& system,
                          const GridOracleConfig& config, int starts,
                          std::uint64_t seed) {
  const Index n = system.dim();
  const Box box = config.box.empty() ? default_box(system) : config.box;

  auto mu = [&system](const Vector& x) { return mu_D(system, x); };
  const GridResult oracle =
      grid_search(mu, box, config.resolution, config.refine_rounds, nullptr);
  if (oracle.value <= 0.0) {
    throw SolveError(SolveErrorCode::kInfeasible,
                     "decision grade vanishes on the whole oracle grid");
  }

  Phase1Result result;
  result.oracle_lambda = oracle.value;
  result.oracle_x = oracle.x;

  if (config.oracle_only) {
    result.lambda_star = oracle.value;
    result.x_star = oracle.x;
    result.bisection_lambda = oracle.value;
    result.direct_lambda = oracle.value;
    result.certified = true;
    result.binding = binding_set(system, result.x_star, result.lambda_star);
    return result;
  }

  std::mt19937_64 rng(seed);
  const std::vector<Vector> dirs = build_directions(n, rng);
  const double step0 = std::max(1e-6, box_span(box) / 8.0);

  // (a) Bisection on the level; each trial solves the max-min gap problem
  // over the inverted polytope.
  Vector witness = oracle.x;
  double level_lo = 0.0;
  if (level_feasible(system, 1.0, starts, rng, dirs, step0, &witness)) {
    level_lo = 1.0;
  } else {
    double level_hi = 1.0;
    while (level_hi - level_lo > kBisectTol) {
      const double mid = 0.5 * (level_lo + level_hi);
      Vector w;
      if (level_feasible(system, mid, starts, rng, dirs, step0, &w)) {
        level_lo = mid;
        witness = w;
      } else {
        level_hi = mid;
      }
    }
  }
  double lambda_a = 0.0;
  const Vector x_a = pattern_ascent(mu, witness, step0, dirs, &lambda_a);
  result.bisection_lambda = lambda_a;

  // (b) Direct multistart ascent on the decision grade.
  std::vector<Vector> direct_seeds;
  direct_seeds.push_back(oracle.x);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < starts; ++i) {
    Vector x(n);
    for (Index j = 0; j < n; ++j) {
      x[j] = box[j].first + (box[j].second - box[j].first) * unit(rng);
    }
    direct_seeds.push_back(std::move(x));
  }
  double lambda_b = -kInf;
  Vector x_b;
  for (const Vector& s : direct_seeds) {
    double v = 0.0;
    const Vector x = pattern_ascent(mu, s, step0, dirs, &v);
    if (v > lambda_b || (v == lambda_b && lex_less(x, x_b))) {
      lambda_b = v;
      x_b = x;
    }
  }
  result.direct_lambda = lambda_b;

  Vector x_star = x_a;
  if (lambda_b > lambda_a || (lambda_b == lambda_a && lex_less(x_b, x_a))) {
    x_star = x_b;
  }
  result.x_star = x_star;
  result.lambda_star = mu_D(system, x_star);
  result.certified =
      result.lambda_star >= oracle.value - config.certify_slack;
  if (!result.certified) {
    result.lambda_star = oracle.value;
    result.x_star = oracle.x;
  }
  result.binding = binding_set(system, result.x_star, result.lambda_star);
  return result;
}

Phase2Result solve_phase2(const MembershipSystem& system,
                          const Phase1Result& phase1,
                          const GridOracleConfig& config, int starts,
                          std::uint64_t seed) {
  const Index n = system.dim();
  const Box box = config.box.empty() ? default_box(system) : config.box;
  const double lambda_star = phase1.lambda_star;

  std::vector<double> scratch;
  auto in_level = [&](const Vector& x) {
    system.eval_all(x, scratch);
    for (double v : scratch) {
      if (v < lambda_star - kLevelPad) return false;
    }
    return true;
  };
  auto level_sum = [&](const Vector& x) {
    system.eval_all(x, scratch);
    double sum = 0.0;
    for (double v : scratch) {
      if (v < lambda_star - kLevelPad) return -kInf;
      sum += v;
    }
    return sum;
  };

  if (!in_level(phase1.x_star)) {
    throw SolveError(SolveErrorCode::kLevelSetEmpty,
                     "phase-1 point fails its own level set; tolerances broke");
  }

  const GridResult oracle =
      grid_search(level_sum, box, config.resolution, config.refine_rounds,
                  &phase1.x_star);

  Phase2Result result;
  result.oracle_sum = oracle.value;
  result.oracle_x = oracle.x;

  double best_sum = level_sum(phase1.x_star);
  Vector best_x = phase1.x_star;

  if (!config.oracle_only) {
    std::mt19937_64 rng(seed);
    const std::vector<Vector> dirs = build_directions(n, rng);
    const double step0 = std::max(1e-6, box_span(box) / 8.0);

    std::vector<Vector> seeds;
    seeds.push_back(phase1.x_star);
    if (lambda_star > 0.0) {
      for (const Vertex& v : level_polytope(system, lambda_star)
                                 .enumerate_vertices()) {
        if (in_level(v.x)) seeds.push_back(v.x);
      }
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int found = 0;
    for (int attempt = 0; attempt < 200 * starts && found < starts;
         ++attempt) {
      Vector x(n);
      for (Index j = 0; j < n; ++j) {
        x[j] = box[j].first + (box[j].second - box[j].first) * unit(rng);
      }
      if (in_level(x)) {
        seeds.push_back(std::move(x));
        ++found;
      }
    }
    for (const Vector& s : seeds) {
      double v = 0.0;
      const Vector x = pattern_ascent(level_sum, s, step0, dirs, &v);
      if (v > best_sum || (v == best_sum && lex_less(x, best_x))) {
        best_sum = v;
        best_x = x;
      }
    }
  } else {
    best_sum = oracle.value;
    best_x = oracle.x;
  }

  result.oracle_improved = oracle.value > best_sum + kDiscrepancyTol;
  result.certified = best_sum >= oracle.value - config.certify_slack;
  if (!result.certified) {
    best_sum = oracle.value;
    best_x = oracle.x;
  }

  result.x_eff = best_x;
  std::vector<double> mu;
  system.eval_all(best_x, mu);
  auto it = mu.begin();
  result.mu_objectives.assign(it, it + system.k());
  it += system.k();
  result.mu_constraints.assign(it, it + system.m());
  it += system.m();
  result.mu_upper.assign(it, it + n);
  it += n;
  result.mu_lower.assign(it, it + n);
  result.sum_memberships = 0.0;
  for (double v : mu) result.sum_memberships += v;
  for (const auto& obj : system.objectives) {
    result.objective_values.push_back(obj.value(best_x));
  }
  return result;
}

EfficiencyVerdict check_fuzzy_efficiency(
    const MembershipSystem& system,
    const std::vector<QuadraticObjective>& objectives, const Vector& x_cand,
    const GridOracleConfig& config) {
  if ((x_cand.array() < 0.0).any()) {
    throw std::invalid_argument("candidate must be nonnegative");
  }
  const Box box = config.box.empty() ? default_box(system) : config.box;
  auto criteria = [&](const Vector& x, std::vector<double>& out) {
    out.clear();
    for (const auto& obj : objectives) out.push_back(obj.value(x));
    std::vector<double> mu;
    system.eval_all(x, mu);
    // Skip the objective grades; the order compares objective values raw.
    out.insert(out.end(), mu.begin() + system.k(), mu.end());
  };
  return dominance_scan(x_cand, box, config.resolution, config.refine_rounds,
                        criteria, [](const Vector&) { return true; });
}

EfficiencyVerdict check_pareto(const std::vector<QuadraticObjective>& objectives,
                               const Polyhedron& polytope, const Vector& x_cand,
                               const GridOracleConfig& config) {
  if (!polytope.contains(x_cand, 1e-6)) {
    throw std::invalid_argument("candidate must be feasible");
  }
  const std::vector<Vertex> vertices = polytope.enumerate_vertices();
  Box box = config.box;
  if (box.empty()) {
    box.assign(polytope.dim(), {kInf, -kInf});
    for (const Vertex& v : vertices) {
      for (Index j = 0; j < polytope.dim(); ++j) {
        box[j].first = std::min(box[j].first, v.x[j]);
        box[j].second = std::max(box[j].second, v.x[j]);
      }
    }
  }
  auto criteria = [&](const Vector& x, std::vector<double>& out) {
    out.clear();
    for (const auto& obj : objectives) out.push_back(obj.value(x));
  };
  auto admit = [&](const Vector& y) { return polytope.contains(y, kFeasTol); };

  EfficiencyVerdict verdict =
      dominance_scan(x_cand, box, config.resolution, config.refine_rounds,
                     criteria, admit);

  // Vertices often carry the exact maxima; fold them in on top of the grid.
  std::vector<double> base, crit;
  criteria(x_cand, base);
  for (const Vertex& v : vertices) {
    criteria(v.x, crit);
    double min_gap = kInf, max_gap = -kInf;
    for (std::size_t i = 0; i < base.size(); ++i) {
      min_gap = std::min(min_gap, crit[i] - base[i]);
      max_gap = std::max(max_gap, crit[i] - base[i]);
    }
    if (min_gap >= -kWeakDomTol && max_gap > verdict.margin) {
      verdict.margin = max_gap;
      verdict.dominator = v.x;
      verdict.verdict = max_gap > kStrictDomTol ? Dominance::kDominated
                        : max_gap > kWeakDomTol ? Dominance::kInconclusive
                                                : Dominance::kEfficient;
    }
  }
  return verdict;
}

}  // namespace fmqp
