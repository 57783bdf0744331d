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

#ifndef FMQP_INSTANCE_HPP_
#define FMQP_INSTANCE_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "fmqp/common.hpp"

namespace fmqp {

/// Maximized objective c'x + (1/2) x'Qx with Q symmetric positive
/// semi-definite. Maximizing a convex quadratic is what makes the whole
/// program non-convex.
struct QuadraticObjective {
  Vector c;
  Matrix Q;

  double value(const Vector& x) const {
    return c.dot(x) + 0.5 * x.dot(Q * x);
  }
};

/// One fuzzy inequality row: nominal coefficients a with tolerances d,
/// nominal resource b with tolerance p. All tolerances strictly positive.
struct FuzzyRow {
  Vector a;
  Vector d;
  double b = 0.0;
  double p = 0.0;
};

/// Fuzzy variable box: lower anchors l with tolerances r, upper anchors u
/// with tolerances t.
struct FuzzyBounds {
  Vector l;
  Vector r;
  Vector u;
  Vector t;
};

struct FuzzyMoqpInstance {
  Index n = 0;
  std::vector<QuadraticObjective> objectives;
  std::vector<FuzzyRow> rows;
  FuzzyBounds bounds;

  Index k() const { return static_cast<Index>(objectives.size()); }
  Index m() const { return static_cast<Index>(rows.size()); }
};

/// One violated invariant. `magnitude` quantifies how far off the datum is
/// (0 when not meaningful).
struct Violation {
  std::string field;
  Index index = -1;
  std::string message;
  double magnitude = 0.0;
};

/// Checks every structural invariant: consistent dimensions, symmetric PSD
/// objective matrices, strictly positive tolerances, nonnegative row
/// coefficients, l <= u, and a nonempty widest feasible region. Returns all
/// violations found; an empty list means the instance is valid.
std::vector<Violation> validate(const FuzzyMoqpInstance& instance);

/// One defuzzified variant: maximize a convex quadratic over
/// {Ax <= rhs, lo <= x <= hi, x >= 0}, with lo already clipped at 0.
struct CrispQp {
  QuadraticObjective objective;
  Matrix A;
  Vector rhs;
  Vector lo;
  Vector hi;
};

/// Builds the four crisp variants of objective q (0-based):
///   variant 0: (a,     b,     [l,     u    ])
///   variant 1: (a + d, b,     [l - r, u    ])
///   variant 2: (a + d, b + p, [l - r, u + t])
///   variant 3: (a,     b + p, [l,     u + t])
/// Lower bounds are clipped at 0 since x >= 0 is a hard constraint.
/// Throws std::out_of_range for a bad objective index.
std::array<CrispQp, 4> crisp_variants(const FuzzyMoqpInstance& instance,
                                      Index q);

/// Parses an instance from its JSON text form. Throws std::runtime_error
/// with a field/position diagnostic on malformed input. The result is not
/// validated; run validate() afterwards.
FuzzyMoqpInstance parse_instance(const std::string& text);

FuzzyMoqpInstance load_instance(const std::filesystem::path& path);

/// Canonical serialization: fixed field order, two-space indent, shortest
/// round-trip number formatting. serialize(parse(serialize(x))) is
/// byte-identical to serialize(x).
std::string serialize_instance(const FuzzyMoqpInstance& instance);

/// FNV-1a 64-bit digest of the canonical serialization, as fixed-width hex.
std::string instance_digest(const FuzzyMoqpInstance& instance);

}  // namespace fmqp

#endif  // FMQP_INSTANCE_HPP_
