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

#ifndef FMQP_TESTS_TEST_SUPPORT_HPP_
#define FMQP_TESTS_TEST_SUPPORT_HPP_

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "fmqp/instance.hpp"

namespace fmqp::testing {

// The worked 2x2 example: two quadratics over two fuzzy rows and fuzzy
// bounds. Same data as tests/data/sample2x2.json.
inline FuzzyMoqpInstance sample_instance() {
  FuzzyMoqpInstance inst;
  inst.n = 2;
  QuadraticObjective z1;
  z1.c = Vector{{1.0, 2.0}};
  z1.Q = Matrix{{2.0, 0.0}, {0.0, 4.0}};
  QuadraticObjective z2;
  z2.c = Vector{{4.0, 7.0}};
  z2.Q = Matrix{{4.0, 0.0}, {0.0, 6.0}};
  inst.objectives = {z1, z2};
  FuzzyRow row1;
  row1.a = Vector{{1.0, 1.0}};
  row1.d = Vector{{1.0, 1.0}};
  row1.b = 10.0;
  row1.p = 5.0;
  FuzzyRow row2;
  row2.a = Vector{{2.0, 3.0}};
  row2.d = Vector{{1.0, 2.0}};
  row2.b = 25.0;
  row2.p = 10.0;
  inst.rows = {row1, row2};
  inst.bounds.l = Vector{{2.0, 2.0}};
  inst.bounds.r = Vector{{1.0, 1.0}};
  inst.bounds.u = Vector{{9.0, 8.0}};
  inst.bounds.t = Vector{{3.0, 2.0}};
  return inst;
}

// Brute-force vertex oracle, independent of the polytope module: solves
// every n-subset of rows with Eigen and filters feasible solutions. Bounds
// are folded the same way ([A; I; -I]).
inline std::vector<Vector> oracle_vertices(const Matrix& A, const Vector& rhs,
                                           const Vector& lo, const Vector& hi,
                                           double feas_tol = 1e-8,
                                           double dedup_tol = 1e-7) {
  const Index m = A.rows();
  const Index n = A.cols();
  Matrix full(m + 2 * n, n);
  Vector frhs(m + 2 * n);
  full.topRows(m) = A;
  frhs.head(m) = rhs;
  full.middleRows(m, n) = Matrix::Identity(n, n);
  frhs.segment(m, n) = hi;
  full.bottomRows(n) = -Matrix::Identity(n, n);
  frhs.tail(n) = -lo;

  std::vector<Vector> points;
  std::vector<int> idx(n);
  for (Index i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  const int rows = static_cast<int>(full.rows());
  while (true) {
    Matrix sub(n, n);
    Vector srhs(n);
    for (Index i = 0; i < n; ++i) {
      sub.row(i) = full.row(idx[i]);
      srhs[i] = frhs[idx[i]];
    }
    Eigen::FullPivLU<Matrix> lu(sub);
    if (lu.rank() == n) {
      const Vector x = lu.solve(srhs);
      if ((sub * x - srhs).cwiseAbs().maxCoeff() <= 1e-9 &&
          ((full * x - frhs).array() <= feas_tol).all()) {
        bool dup = false;
        for (const Vector& y : points) {
          if ((x - y).cwiseAbs().maxCoeff() < dedup_tol) dup = true;
        }
        if (!dup) points.push_back(x);
      }
    }
    // next combination
    Index i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (idx[i] < rows - static_cast<int>(n - i)) {
        ++idx[i];
        for (Index j2 = i + 1; j2 < n; ++j2) idx[j2] = idx[j2 - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

// Random valid instance with nonnegative data and nonempty variant regions.
// Deterministic per (seed, n, k, m).
inline FuzzyMoqpInstance random_instance(std::uint64_t seed, Index n = 2,
                                         Index k = 2, Index m = 2) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 1000003 + attempt);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uni = [&](double lo, double hi) {
      return lo + (hi - lo) * unit(rng);
    };

    FuzzyMoqpInstance inst;
    inst.n = n;
    for (Index q = 0; q < k; ++q) {
      QuadraticObjective obj;
      obj.c = Vector::Zero(n);
      for (Index j = 0; j < n; ++j) obj.c[j] = uni(0.0, 3.0);
      Matrix M(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) M(i, j) = uni(-1.0, 1.0);
      }
      obj.Q = M.transpose() * M;  // symmetric PSD
      inst.objectives.push_back(std::move(obj));
    }
    inst.bounds.l = Vector::Zero(n);
    inst.bounds.r = Vector::Zero(n);
    inst.bounds.u = Vector::Zero(n);
    inst.bounds.t = Vector::Zero(n);
    for (Index j = 0; j < n; ++j) {
      inst.bounds.l[j] = uni(0.5, 1.5);
      inst.bounds.r[j] = uni(0.2, 1.0);
      inst.bounds.u[j] = inst.bounds.l[j] + uni(1.0, 4.0);
      inst.bounds.t[j] = uni(0.5, 2.0);
    }
    for (Index i = 0; i < m; ++i) {
      FuzzyRow row;
      row.a = Vector::Zero(n);
      row.d = Vector::Zero(n);
      for (Index j = 0; j < n; ++j) {
        row.a[j] = uni(0.0, 2.0);
        row.d[j] = uni(0.2, 1.2);
      }
      row.b = row.a.dot(inst.bounds.u) * uni(0.6, 1.1) + 0.5;
      row.p = uni(0.5, 3.0);
      inst.rows.push_back(std::move(row));
    }

    if (!validate(inst).empty()) continue;
    // Variant regions must be nonempty; the tightest one is variant 2,
    // whose row values are smallest at its lower corner.
    const Vector corner = (inst.bounds.l - inst.bounds.r).cwiseMax(0.0);
    bool ok = true;
    for (const FuzzyRow& row : inst.rows) {
      if ((row.a + row.d).dot(corner) > row.b) ok = false;
    }
    if (ok) return inst;
  }
}

}  // namespace fmqp::testing

#endif  // FMQP_TESTS_TEST_SUPPORT_HPP_
