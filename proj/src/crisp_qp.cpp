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

#include "fmqp/crisp_qp.hpp"

#include <algorithm>

namespace fmqp {

CrispOptimum solve_crisp(const CrispQp& qp) {
  const Polyhedron poly =
      Polyhedron::from_bounds(qp.A, qp.rhs, qp.lo.cwiseMax(0.0), qp.hi);
  const std::vector<Vertex> vertices = poly.enumerate_vertices();
  if (vertices.empty()) {
    throw SolveError(SolveErrorCode::kInfeasible,
                     "crisp feasible region is empty");
  }
  CrispOptimum best;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double v = qp.objective.value(vertices[i].x);
    // Strict improvement only: the enumeration is lexicographically sorted,
    // so exact ties keep the lexicographically smallest argmax.
    if (best.vertex_rank < 0 || v > best.value) {
      best.value = v;
      best.argmax = vertices[i].x;
      best.vertex_rank = static_cast<int>(i);
    }
  }
  return best;
}

std::array<CrispOptimum, 4> solve_variants(const FuzzyMoqpInstance& instance,
                                           Index q) {
  const std::array<CrispQp, 4> variants = crisp_variants(instance, q);
  return {solve_crisp(variants[0]), solve_crisp(variants[1]),
          solve_crisp(variants[2]), solve_crisp(variants[3])};
}

AspirationInterval aspiration_from(const std::array<CrispOptimum, 4>& optima) {
  AspirationInterval out;
  out.lo = out.hi = optima[0].value;
  for (const auto& opt : optima) {
    out.lo = std::min(out.lo, opt.value);
    out.hi = std::max(out.hi, opt.value);
  }
  return out;
}

AspirationInterval aspiration_interval(const FuzzyMoqpInstance& instance,
                                       Index q) {
  return aspiration_from(solve_variants(instance, q));
}

}  // namespace fmqp
