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

#ifndef FMQP_POLYTOPE_HPP_
#define FMQP_POLYTOPE_HPP_

#include <vector>

#include "fmqp/common.hpp"

namespace fmqp {

// Exact-enumeration size limits; beyond these the subset count explodes.
inline constexpr Index kMaxVertexEnumDim = 12;
inline constexpr Index kMaxVertexEnumRows = 24;

// Geometry tolerances shared by enumeration and containment.
inline constexpr double kFeasTol = 1e-8;      // row satisfaction slack
inline constexpr double kActiveTol = 1e-8;    // tight-row detection
inline constexpr double kResidualTol = 1e-9;  // active-set solve residual
inline constexpr double kDedupTol = 1e-7;     // vertex merge radius (inf-norm)

/// Extreme point together with the rows it makes tight.
struct Vertex {
  Vector x;
  std::vector<int> active;  // row indices with |A_i x - rhs_i| <= kActiveTol
};

/// Bounded polyhedron {x : Ax <= rhs} with every bound folded in as an
/// ordinary row. Construction rejects shapes with no upper- or lower-bounding
/// row in some coordinate (the recession test that is exact for box-bounded
/// systems, which is all this project builds).
class Polyhedron {
 public:
  /// Wraps raw rows. Throws SolveError(kUnbounded) if some coordinate
  /// direction has no bounding row.
  static Polyhedron from_rows(Matrix A, Vector rhs);

  /// Folds box bounds into rows: [A; I; -I] x <= [rhs; hi; -lo].
  static Polyhedron from_bounds(const Matrix& A, const Vector& rhs,
                                const Vector& lo, const Vector& hi);

  const Matrix& rows() const { return A_; }
  const Vector& rhs() const { return rhs_; }
  Index dim() const { return A_.cols(); }
  Index row_count() const { return A_.rows(); }

  /// True iff A x <= rhs + tol componentwise.
  bool contains(const Vector& x, double tol) const;

  /// Every extreme point exactly once, sorted lexicographically by
  /// coordinates. For each n-subset of rows with a well-conditioned square
  /// system, solves the equality system, keeps feasible solutions, and
  /// merges points within kDedupTol. Degenerate vertices appear once, with
  /// all tight rows listed. Throws SolveError(kTooLarge) beyond the
  /// enumeration limits.
  std::vector<Vertex> enumerate_vertices() const;

 private:
  Polyhedron(Matrix A, Vector rhs);

  Matrix A_;
  Vector rhs_;
};

}  // namespace fmqp

#endif  // FMQP_POLYTOPE_HPP_
