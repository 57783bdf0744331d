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

#ifndef FMQP_CRISP_QP_HPP_
#define FMQP_CRISP_QP_HPP_

#include <array>
#include <vector>

#include "fmqp/instance.hpp"
#include "fmqp/polytope.hpp"

namespace fmqp {

struct CrispOptimum {
  double value = 0.0;
  Vector argmax;
  int vertex_rank = -1;  // position of argmax in the sorted vertex list
};

/// [lo, hi] envelope of one objective's four variant optima.
struct AspirationInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool degenerate() const { return width() < 1e-9; }
};

/// Global maximum of a convex quadratic over a bounded polyhedron. A convex
/// function attains its maximum over a compact polyhedron at an extreme
/// point, so evaluating every enumerated vertex is exact; no local
/// refinement is applied. Ties break to the lexicographically smallest
/// argmax. Throws SolveError(kInfeasible) when the region is empty and
/// propagates kUnbounded/kTooLarge from enumeration.
CrispOptimum solve_crisp(const CrispQp& qp);

/// Solves all four variants of objective q; order matches crisp_variants.
std::array<CrispOptimum, 4> solve_variants(const FuzzyMoqpInstance& instance,
                                           Index q);

/// Min/max of the four variant optima of objective q.
AspirationInterval aspiration_interval(const FuzzyMoqpInstance& instance,
                                       Index q);

AspirationInterval aspiration_from(const std::array<CrispOptimum, 4>& optima);

}  // namespace fmqp

#endif  // FMQP_CRISP_QP_HPP_
