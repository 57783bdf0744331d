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

#include "fmqp/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fmqp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Locale-independent decimal with up to 17 significant digits; round-trips
// exactly.
std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

// Minimal ordered JSON emitter; nlohmann's serializer does not honor the
// 17-significant-digit contract for reals.
class JsonWriter {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& name) {
    separate();
    out_ += quote(name);
    out_ += ':';
    pending_value_ = true;
  }

  void value(double v) { raw(format_real(v)); }
  void value(int v) { raw(std::to_string(v)); }
  void value(Index v) { raw(std::to_string(v)); }
  void value(std::uint64_t v) { raw(std::to_string(v)); }
  void value(bool v) { raw(v ? "true" : "false"); }
  void value(const std::string& v) { raw(quote(v)); }
  void value(const char* v) { raw(quote(v)); }
  void null() { raw("null"); }

  void value(const Vector& v) {
    begin_array();
    for (Index i = 0; i < v.size(); ++i) value(v[i]);
    end_array();
  }
  void value(const std::vector<double>& v) {
    begin_array();
    for (double e : v) value(e);
    end_array();
  }
  void value(const std::vector<std::string>& v) {
    begin_array();
    for (const auto& e : v) value(e);
    end_array();
  }

  std::string take() { return std::move(out_); }

 private:
  void open(char c) {
    separate();
    out_ += c;
    first_.push_back(true);
    pending_value_ = false;
  }
  void close(char c) {
    out_ += c;
    first_.pop_back();
  }
  void raw(const std::string& s) {
    separate();
    out_ += s;
    pending_value_ = false;
  }
  void separate() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
    }
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

void write_crisp_optimum(JsonWriter& w, const CrispOptimum& opt) {
  w.begin_object();
  w.key("value");
  w.value(opt.value);
  w.key("argmax");
  w.value(opt.argmax);
  w.key("vertex_rank");
  w.value(opt.vertex_rank);
  w.end_object();
}

const char* verdict_name(Dominance verdict) {
  switch (verdict) {
    case Dominance::kEfficient: return "efficient";
    case Dominance::kDominated: return "dominated";
    case Dominance::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
}

void write_curve_csv(const std::filesystem::path& path,
                     const std::vector<CurveSample>& samples) {
  std::string text = "input,value\n";
  for (const auto& [input, value] : samples) {
    text += format_real(input);
    text += ',';
    text += format_real(value);
    text += '\n';
  }
  write_file(path, text);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_point(const Vector& x, const char* fmt = "%.7g") {
  std::string out = "(";
  char buf[64];
  for (Index j = 0; j < x.size(); ++j) {
    std::snprintf(buf, sizeof(buf), fmt, x[j]);
    if (j > 0) out += ", ";
    out += buf;
  }
  out += ")";
  return out;
}

}  // namespace

SolveReport run_pipeline(const std::filesystem::path& instance_path,
                         const PipelineOptions& options) {
  SolveReport report;
  report.instance_path = instance_path.string();
  report.seed = options.seed;
  report.starts = options.starts;

  auto t0 = Clock::now();
  const FuzzyMoqpInstance instance = load_instance(instance_path);
  const std::vector<Violation> violations = validate(instance);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "instance validation failed:";
    for (const auto& v : violations) {
      msg << "\n  " << v.field;
      if (v.index >= 0) msg << "[" << v.index + 1 << "]";
      msg << ": " << v.message;
    }
    throw std::runtime_error(msg.str());
  }
  report.timings.validate_ms = ms_since(t0);
  report.n = instance.n;
  report.k = instance.k();
  report.m = instance.m();
  report.digest = instance_digest(instance);

  t0 = Clock::now();
  std::vector<AspirationInterval> intervals;
  for (Index q = 0; q < instance.k(); ++q) {
    report.crisp_optima.push_back(solve_variants(instance, q));
    intervals.push_back(aspiration_from(report.crisp_optima.back()));
    if (intervals.back().degenerate()) {
      report.warnings.push_back(
          "aspiration interval of objective " + std::to_string(q + 1) +
          " is degenerate; step-shaped grade used");
    }
  }
  report.aspiration = intervals;
  report.timings.crisp_ms = ms_since(t0);

  const MembershipSystem system = build_system(instance, intervals);
  GridOracleConfig oracle;
  oracle.resolution = options.grid_resolution;
  oracle.refine_rounds = options.refine_rounds;
  oracle.certify_slack = options.certify_slack;
  oracle.oracle_only = options.oracle_only;
  oracle.box.clear();
  for (Index j = 0; j < system.dim(); ++j) {
    oracle.box.emplace_back(0.0, system.box_hi[j]);
  }
  report.oracle = oracle;

  t0 = Clock::now();
  report.phase1 = solve_phase1(system, oracle, options.starts, options.seed);
  report.timings.phase1_ms = ms_since(t0);
  if (!report.phase1.certified) {
    report.warnings.push_back(
        "phase 1 uncertified: local search fell below the grid oracle; "
        "oracle point reported");
  }

  t0 = Clock::now();
  report.phase2 = solve_phase2(system, report.phase1, oracle, options.starts,
                               options.seed);
  report.timings.phase2_ms = ms_since(t0);
  if (report.phase2.oracle_improved) {
    report.warnings.push_back(
        "grid oracle found a level-set point with a larger membership sum; "
        "see phase2.oracle_x");
  }
  if (!report.phase2.certified) {
    report.warnings.push_back(
        "phase 2 uncertified: local search fell below the grid oracle; "
        "oracle point reported");
  }

  t0 = Clock::now();
  report.efficiency = check_fuzzy_efficiency(system, instance.objectives,
                                             report.phase2.x_eff, oracle);
  report.timings.efficiency_ms = ms_since(t0);

  if (!options.report_path.empty()) {
    write_file(options.report_path,
               render_report_json(report, options.include_timings));
  }
  if (!options.curves_dir.empty()) {
    emit_curves(system, options.curves_dir, options.curve_slice);
  }
  return report;
}

std::string render_report_json(const SolveReport& report,
                               bool include_timings) {
  JsonWriter w;
  w.begin_object();

  w.key("instance");
  w.begin_object();
  w.key("path");
  w.value(report.instance_path);
  w.key("n");
  w.value(report.n);
  w.key("k");
  w.value(report.k);
  w.key("m");
  w.value(report.m);
  w.key("digest");
  w.value(report.digest);
  w.end_object();

  w.key("crisp_optima");
  w.begin_array();
  for (const auto& per_objective : report.crisp_optima) {
    w.begin_array();
    for (const auto& opt : per_objective) write_crisp_optimum(w, opt);
    w.end_array();
  }
  w.end_array();

  w.key("aspiration");
  w.begin_array();
  for (const auto& interval : report.aspiration) {
    w.begin_object();
    w.key("lo");
    w.value(interval.lo);
    w.key("hi");
    w.value(interval.hi);
    w.end_object();
  }
  w.end_array();

  w.key("phase1");
  w.begin_object();
  w.key("lambda_star");
  w.value(report.phase1.lambda_star);
  w.key("x_star");
  w.value(report.phase1.x_star);
  w.key("binding");
  w.value(report.phase1.binding);
  w.key("oracle_lambda");
  w.value(report.phase1.oracle_lambda);
  w.key("oracle_x");
  w.value(report.phase1.oracle_x);
  w.key("bisection_lambda");
  w.value(report.phase1.bisection_lambda);
  w.key("direct_lambda");
  w.value(report.phase1.direct_lambda);
  w.key("certified");
  w.value(report.phase1.certified);
  w.end_object();

  w.key("phase2");
  w.begin_object();
  w.key("x_eff");
  w.value(report.phase2.x_eff);
  w.key("mu_objectives");
  w.value(report.phase2.mu_objectives);
  w.key("mu_constraints");
  w.value(report.phase2.mu_constraints);
  w.key("mu_upper");
  w.value(report.phase2.mu_upper);
  w.key("mu_lower");
  w.value(report.phase2.mu_lower);
  w.key("objective_values");
  w.value(report.phase2.objective_values);
  w.key("sum_memberships");
  w.value(report.phase2.sum_memberships);
  w.key("oracle_sum");
  w.value(report.phase2.oracle_sum);
  w.key("oracle_x");
  w.value(report.phase2.oracle_x);
  w.key("certified");
  w.value(report.phase2.certified);
  w.key("oracle_improved");
  w.value(report.phase2.oracle_improved);
  w.end_object();

  w.key("efficiency");
  w.begin_object();
  w.key("verdict");
  w.value(verdict_name(report.efficiency.verdict));
  w.key("dominator");
  if (report.efficiency.verdict == Dominance::kEfficient) {
    w.null();
  } else {
    w.value(report.efficiency.dominator);
  }
  w.key("margin");
  w.value(report.efficiency.margin);
  w.end_object();

  w.key("oracle");
  w.begin_object();
  w.key("box");
  w.begin_array();
  for (const auto& [lo, hi] : report.oracle.box) {
    w.begin_array();
    w.value(lo);
    w.value(hi);
    w.end_array();
  }
  w.end_array();
  w.key("resolution");
  w.value(report.oracle.resolution);
  w.key("refine_rounds");
  w.value(report.oracle.refine_rounds);
  w.key("certify_slack");
  w.value(report.oracle.certify_slack);
  w.key("oracle_only");
  w.value(report.oracle.oracle_only);
  w.key("starts");
  w.value(report.starts);
  w.key("seed");
  w.value(report.seed);
  w.end_object();

  w.key("timings");
  if (include_timings) {
    w.begin_object();
    w.key("validate_ms");
    w.value(report.timings.validate_ms);
    w.key("crisp_ms");
    w.value(report.timings.crisp_ms);
    w.key("phase1_ms");
    w.value(report.timings.phase1_ms);
    w.key("phase2_ms");
    w.value(report.timings.phase2_ms);
    w.key("efficiency_ms");
    w.value(report.timings.efficiency_ms);
    w.end_object();
  } else {
    w.null();
  }

  w.key("warnings");
  w.value(report.warnings);

  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string render_report_text(const SolveReport& report) {
  std::ostringstream out;
  char buf[128];
  out << "instance: " << report.instance_path << "  (n=" << report.n
      << ", k=" << report.k << ", m=" << report.m << ", digest "
      << report.digest << ")\n";
  out << "crisp optima (per variant) and aspiration intervals:\n";
  for (std::size_t q = 0; q < report.crisp_optima.size(); ++q) {
    out << "  Z" << q + 1 << ":";
    for (const auto& opt : report.crisp_optima[q]) {
      std::snprintf(buf, sizeof(buf), " %.7g", opt.value);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), "   ->  [%.7g, %.7g]\n",
                  report.aspiration[q].lo, report.aspiration[q].hi);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "phase 1 (max-min): lambda* = %.7g  %s\n",
                report.phase1.lambda_star,
                report.phase1.certified ? "[certified]" : "[UNCERTIFIED]");
  out << buf;
  out << "  x* = " << format_point(report.phase1.x_star) << "\n";
  std::snprintf(buf, sizeof(buf), "  oracle lambda = %.7g at ",
                report.phase1.oracle_lambda);
  out << buf << format_point(report.phase1.oracle_x) << "\n";
  out << "  binding: " << join(report.phase1.binding, ", ") << "\n";
  std::snprintf(buf, sizeof(buf),
                "phase 2 (membership sum): sum = %.7g  %s\n",
                report.phase2.sum_memberships,
                report.phase2.certified ? "[certified]" : "[UNCERTIFIED]");
  out << buf;
  out << "  x = " << format_point(report.phase2.x_eff) << "\n";
  auto grades = [&](const char* name, const std::vector<double>& v) {
    out << "  " << name << ":";
    for (double e : v) {
      std::snprintf(buf, sizeof(buf), " %.7g", e);
      out << buf;
    }
    out << "\n";
  };
  grades("objective grades", report.phase2.mu_objectives);
  grades("constraint grades", report.phase2.mu_constraints);
  grades("upper-bound grades", report.phase2.mu_upper);
  grades("lower-bound grades", report.phase2.mu_lower);
  grades("objective values", report.phase2.objective_values);
  out << "efficiency: " << verdict_name(report.efficiency.verdict);
  if (report.efficiency.verdict != Dominance::kEfficient) {
    std::snprintf(buf, sizeof(buf), " (margin %.7g, by ",
                  report.efficiency.margin);
    out << buf << format_point(report.efficiency.dominator) << ")";
  }
  out << "\n";
  for (const auto& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  return out.str();
}

void emit_curves(const MembershipSystem& system,
                 const std::filesystem::path& dir,
                 const std::vector<double>& slice_dir) {
  constexpr int kSamples = 401;
  std::filesystem::create_directories(dir);

  for (Index q = 0; q < system.k(); ++q) {
    const TrigObjectiveMf& mf = system.objective_mfs[q];
    const double width = std::max(mf.hi() - mf.lo(), 1.0);
    write_curve_csv(
        dir / ("objective_" + std::to_string(q + 1) + ".csv"),
        sample_scalar_curve([&](double z) { return mf.eval(z); },
                            mf.lo() - 0.1 * width, mf.hi() + 0.1 * width,
                            kSamples));
  }

  Vector ray = Vector::Ones(system.dim());
  if (!slice_dir.empty()) {
    if (static_cast<Index>(slice_dir.size()) != system.dim()) {
      throw std::invalid_argument("slice direction has wrong dimension");
    }
    for (Index j = 0; j < system.dim(); ++j) ray[j] = slice_dir[j];
    if ((ray.array() <= 0.0).all()) {
      throw std::invalid_argument("slice direction must have a positive entry");
    }
  }
  double tau_hi = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < system.dim(); ++j) {
    if (ray[j] > 0.0) tau_hi = std::min(tau_hi, system.box_hi[j] / ray[j]);
  }
  for (Index i = 0; i < system.m(); ++i) {
    write_curve_csv(dir / ("constraint_" + std::to_string(i + 1) + ".csv"),
                    sample_ray_curve(system.constraint_mfs[i], ray, 0.0,
                                     tau_hi, kSamples));
  }

  for (Index j = 0; j < system.dim(); ++j) {
    const LinearBoundMf& upper = system.upper_mfs[j];
    write_curve_csv(
        dir / ("upper_bound_" + std::to_string(j + 1) + ".csv"),
        sample_scalar_curve([&](double x) { return upper.eval(x); },
                            upper.anchor() - 2.0 * upper.tol(),
                            upper.anchor() + 2.0 * upper.tol(), kSamples));
    const LinearBoundMf& lower = system.lower_mfs[j];
    write_curve_csv(
        dir / ("lower_bound_" + std::to_string(j + 1) + ".csv"),
        sample_scalar_curve([&](double x) { return lower.eval(x); },
                            lower.anchor() - 2.0 * lower.tol(),
                            lower.anchor() + 2.0 * lower.tol(), kSamples));
  }
}

int report_exit_code(const SolveReport& report) {
  return report.certified() ? 0 : 2;
}

}  // namespace fmqp
