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

#include "fmqp/membership.hpp"

#include <cmath>
#include <numbers>

namespace fmqp {
namespace {

constexpr double kDegenerateWidth = 1e-9;

void check_level(double lambda) {
  if (!(lambda > 0.0) || !(lambda <= 1.0)) {
    throw std::invalid_argument("level must lie in (0, 1]");
  }
}

}  // namespace

double clipped_sin(double rho) {
  if (rho <= 0.0) return 0.0;
  if (rho >= 1.0) return 1.0;
  return std::sin(rho * std::numbers::pi / 2.0);
}

double sin_level_inverse(double lambda) {
  if (lambda >= 1.0 - 1e-15) return 1.0;
  if (lambda <= 0.0) return 0.0;
  return 2.0 / std::numbers::pi * std::asin(lambda);
}

TrigConstraintMf::TrigConstraintMf(Vector a, Vector d, double b, double p)
    : a_(std::move(a)), d_(std::move(d)), b_(b), p_(p) {
  if (a_.size() != d_.size()) {
    throw std::invalid_argument("coefficient/tolerance length mismatch");
  }
  if (!(p_ > 0.0) || !(d_.array() > 0.0).all()) {
    throw std::invalid_argument("constraint tolerances must be positive");
  }
}

double TrigConstraintMf::ratio(const Vector& x) const {
  return (b_ - a_.dot(x)) / (d_.dot(x) + p_);
}

LinearRow TrigConstraintMf::invert_level(double lambda) const {
  check_level(lambda);
  const double s = sin_level_inverse(lambda);
  return LinearRow{a_ + s * d_, b_ - s * p_};
}

LinearBoundMf::LinearBoundMf(BoundKind kind, double anchor, double tol)
    : kind_(kind), anchor_(anchor), tol_(tol) {
  if (!(tol_ > 0.0)) {
    throw std::invalid_argument("bound tolerance must be positive");
  }
}

double LinearBoundMf::eval(double xj) const {
  if (kind_ == BoundKind::kUpper) {
    if (xj <= anchor_) return 1.0;
    if (xj >= anchor_ + tol_) return 0.0;
    return (anchor_ + tol_ - xj) / tol_;
  }
  if (xj >= anchor_) return 1.0;
  if (xj <= anchor_ - tol_) return 0.0;
  return (xj - anchor_ + tol_) / tol_;
}

double LinearBoundMf::invert_level(double lambda) const {
  check_level(lambda);
  return kind_ == BoundKind::kUpper ? anchor_ + tol_ * (1.0 - lambda)
                                    : anchor_ - tol_ * (1.0 - lambda);
}

TrigObjectiveMf::TrigObjectiveMf(double lo, double hi)
    : lo_(lo), hi_(hi), degenerate_(hi - lo < kDegenerateWidth) {
  if (hi < lo) throw std::invalid_argument("aspiration interval inverted");
}

double TrigObjectiveMf::eval(double z) const {
  if (degenerate_) return z < lo_ ? 0.0 : 1.0;
  return clipped_sin((z - lo_) / (hi_ - lo_));
}

double TrigObjectiveMf::invert_level(double lambda) const {
  check_level(lambda);
  if (degenerate_) return lo_;
  return lo_ + sin_level_inverse(lambda) * (hi_ - lo_);
}

FuzzyParamMf::FuzzyParamMf(FuzzyParamKind kind, double nominal, double tol)
    : kind_(kind), nominal_(nominal), tol_(tol) {
  if (!(tol_ > 0.0)) {
    throw std::invalid_argument("parameter tolerance must be positive");
  }
}

double FuzzyParamMf::eval(double y) const {
  if (kind_ == FuzzyParamKind::kLowerBound) {
    if (y >= nominal_) return 1.0;
    if (y <= nominal_ - tol_) return 0.0;
    return (y - nominal_ + tol_) / tol_;
  }
  // Resources, coefficients, and upper anchors all degrade upward.
  if (y <= nominal_) return 1.0;
  if (y >= nominal_ + tol_) return 0.0;
  return (nominal_ + tol_ - y) / tol_;
}

std::vector<CurveSample> sample_ray_curve(const TrigConstraintMf& mf,
                                          const Vector& dir, double tau_lo,
                                          double tau_hi, int count) {
  if (dir.size() != mf.a().size()) {
    throw std::invalid_argument("ray dimension mismatch");
  }
  return sample_scalar_curve(
      [&](double tau) { return mf.eval(Vector(tau * dir)); }, tau_lo, tau_hi,
      count);
}

}  // namespace fmqp
