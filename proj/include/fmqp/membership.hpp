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

#ifndef FMQP_MEMBERSHIP_HPP_
#define FMQP_MEMBERSHIP_HPP_

#include <utility>
#include <vector>

#include "fmqp/common.hpp"

namespace fmqp {

/// sin-shaped grade over a normalized satisfaction ratio: 0 for rho <= 0,
/// sin(rho*pi/2) on (0,1), 1 for rho >= 1. Concave and non-decreasing on
/// [0, inf).
double clipped_sin(double rho);

/// Inverse of the middle branch: the smallest ratio whose grade reaches
/// lambda, s(lambda) = (2/pi) asin(lambda). The argument is capped at
/// 1 - 1e-15 to stay clear of the arcsine's singular derivative; lambda >= 1
/// maps to exactly 1 so full satisfaction inverts to the exact breakpoint.
double sin_level_inverse(double lambda);

/// Linear inequality coeffs . x <= rhs produced by level inversion.
struct LinearRow {
  Vector coeffs;
  double rhs = 0.0;
};

/// Grade of one fuzzy inequality row a~ . x <= b~ at a point x >= 0:
/// clipped_sin of rho(x) = (b - a.x) / (d.x + p). Fully satisfied (1) while
/// b >= (a+d).x + p, violated (0) once a.x >= b, sin-shaped between. The
/// denominator is positive for every x >= 0, and the grade is non-increasing
/// along componentwise-increasing rays because a >= 0 and d > 0.
class TrigConstraintMf {
 public:
  TrigConstraintMf(Vector a, Vector d, double b, double p);

  double ratio(const Vector& x) const;
  double eval(const Vector& x) const { return clipped_sin(ratio(x)); }

  /// Level set {eval >= lambda} as the linear row
  /// (a + s d) . x <= b - s p with s = sin_level_inverse(lambda).
  /// Exact for lambda in (0, 1]; throws std::invalid_argument outside.
  LinearRow invert_level(double lambda) const;

  const Vector& a() const { return a_; }
  const Vector& d() const { return d_; }
  double b() const { return b_; }
  double p() const { return p_; }

 private:
  Vector a_, d_;
  double b_, p_;
};

enum class BoundKind { kUpper, kLower };

/// Piecewise-linear grade of one soft variable bound. Upper: 1 up to the
/// anchor, falling to 0 at anchor + tol. Lower: 0 up to anchor - tol, rising
/// to 1 at the anchor.
class LinearBoundMf {
 public:
  LinearBoundMf(BoundKind kind, double anchor, double tol);

  double eval(double xj) const;

  /// Threshold of the level set {eval >= lambda}: xj <= anchor + tol(1-lambda)
  /// for upper bounds, xj >= anchor - tol(1-lambda) for lower bounds.
  double invert_level(double lambda) const;

  BoundKind kind() const { return kind_; }
  double anchor() const { return anchor_; }
  double tol() const { return tol_; }

 private:
  BoundKind kind_;
  double anchor_, tol_;
};

/// sin-shaped grade of an objective value over its aspiration interval:
/// 0 at or below lo, 1 at or above hi. A zero-width interval degenerates to
/// the step function (0 below lo, 1 at or above lo).
class TrigObjectiveMf {
 public:
  TrigObjectiveMf(double lo, double hi);

  double eval(double z) const;

  /// Smallest objective value whose grade reaches lambda,
  /// lo + s(lambda)(hi-lo); the degenerate form inverts to lo for every
  /// lambda. Throws std::invalid_argument for lambda outside (0, 1].
  double invert_level(double lambda) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool degenerate() const { return degenerate_; }

 private:
  double lo_, hi_;
  bool degenerate_;
};

enum class FuzzyParamKind { kResource, kCoefficient, kUpperBound, kLowerBound };

/// Linear membership of a single fuzzy datum (resource, coefficient, or
/// bound anchor); used for validation displays and curve exports only.
class FuzzyParamMf {
 public:
  FuzzyParamMf(FuzzyParamKind kind, double nominal, double tol);

  double eval(double y) const;

  FuzzyParamKind kind() const { return kind_; }
  double nominal() const { return nominal_; }
  double tol() const { return tol_; }

 private:
  FuzzyParamKind kind_;
  double nominal_, tol_;
};

using CurveSample = std::pair<double, double>;

/// Uniform samples (input, f(input)) over [from, to]; count >= 2 and
/// from <= to required.
template <class F>
std::vector<CurveSample> sample_scalar_curve(F&& f, double from, double to,
                                             int count) {
  if (count < 2) throw std::invalid_argument("curve sample count must be >= 2");
  if (!(from <= to)) throw std::invalid_argument("empty curve domain");
  std::vector<CurveSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double tau =
        from + (to - from) * static_cast<double>(i) / (count - 1);
    out.emplace_back(tau, f(tau));
  }
  return out;
}

/// Samples a constraint grade along the ray x(tau) = tau * dir; the input
/// column is tau.
std::vector<CurveSample> sample_ray_curve(const TrigConstraintMf& mf,
                                          const Vector& dir, double tau_lo,
                                          double tau_hi, int count);

}  // namespace fmqp

#endif  // FMQP_MEMBERSHIP_HPP_
