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

#include "fmqp/polytope.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <string>
#include <vector>

namespace fmqp {
namespace {

// Advances an increasing index combination; returns false when exhausted.
bool next_combination(std::vector<int>& idx, int row_count) {
  const int n = static_cast<int>(idx.size());
  for (int i = n - 1; i >= 0; --i) {
    if (idx[i] < row_count - (n - i)) {
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Polyhedron::Polyhedron(Matrix A, Vector rhs)
    : A_(std::move(A)), rhs_(std::move(rhs)) {}

Polyhedron Polyhedron::from_rows(Matrix A, Vector rhs) {
  if (A.rows() != rhs.size()) {
    throw std::invalid_argument("row/rhs count mismatch");
  }
  // Recession test per coordinate: an upper bound needs a row with a
  // positive coefficient, a lower bound one with a negative coefficient.
  // Exact for systems with folded box rows.
  for (Index j = 0; j < A.cols(); ++j) {
    bool has_upper = false, has_lower = false;
    for (Index i = 0; i < A.rows(); ++i) {
      if (A(i, j) > 0) has_upper = true;
      if (A(i, j) < 0) has_lower = true;
    }
    if (!has_upper || !has_lower) {
      throw SolveError(SolveErrorCode::kUnbounded,
                       "polyhedron unbounded in coordinate " +
                           std::to_string(j + 1));
    }
  }
  return Polyhedron(std::move(A), std::move(rhs));
}

Polyhedron Polyhedron::from_bounds(const Matrix& A, const Vector& rhs,
                                   const Vector& lo, const Vector& hi) {
  const Index m = A.rows();
  const Index n = A.cols();
  if (lo.size() != n || hi.size() != n) {
    throw std::invalid_argument("bound dimension mismatch");
  }
  Matrix full(m + 2 * n, n);
  Vector frhs(m + 2 * n);
  full.topRows(m) = A;
  frhs.head(m) = rhs;
  full.middleRows(m, n) = Matrix::Identity(n, n);
  frhs.segment(m, n) = hi;
  full.bottomRows(n) = -Matrix::Identity(n, n);
  frhs.tail(n) = -lo;
  return from_rows(std::move(full), std::move(frhs));
}

bool Polyhedron::contains(const Vector& x, double tol) const {
  if (x.size() != dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  return ((A_ * x - rhs_).array() <= tol).all();
}

std::vector<Vertex> Polyhedron::enumerate_vertices() const {
  const Index n = dim();
  const Index rows = row_count();
  if (n > kMaxVertexEnumDim || rows > kMaxVertexEnumRows) {
    throw SolveError(SolveErrorCode::kTooLarge,
                     "vertex enumeration limited to " +
                         std::to_string(kMaxVertexEnumDim) + " dims and " +
                         std::to_string(kMaxVertexEnumRows) + " rows");
  }
  if (rows < n) return {};

  std::vector<Vector> points;
  std::vector<int> idx(n);
  for (Index i = 0; i < n; ++i) idx[i] = static_cast<int>(i);

  Matrix sub(n, n);
  Vector subrhs(n);
  do {
    for (Index i = 0; i < n; ++i) {
      sub.row(i) = A_.row(idx[i]);
      subrhs[i] = rhs_[idx[i]];
    }
    Eigen::FullPivLU<Matrix> lu(sub);
    if (lu.rank() < n) continue;
    const Vector x = lu.solve(subrhs);
    // Near-singular systems blow up the residual; drop them.
    const double scale = std::max(1.0, subrhs.cwiseAbs().maxCoeff());
    if ((sub * x - subrhs).cwiseAbs().maxCoeff() > kResidualTol * scale) {
      continue;
    }
    if (contains(x, kFeasTol)) points.push_back(x);
  } while (next_combination(idx, static_cast<int>(rows)));

  std::sort(points.begin(), points.end(), lex_less);
  std::vector<Vertex> out;
  for (const Vector& x : points) {
    const bool dup =
        std::any_of(out.begin(), out.end(), [&](const Vertex& v) {
          return (v.x - x).cwiseAbs().maxCoeff() < kDedupTol;
        });
    if (dup) continue;
    Vertex v;
    v.x = x;
    const Vector slack = rhs_ - A_ * x;
    for (Index i = 0; i < rows; ++i) {
      if (std::abs(slack[i]) <= kActiveTol) v.active.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fmqp
