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

#ifndef FMQP_COMMON_HPP_
#define FMQP_COMMON_HPP_

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace fmqp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

enum class SolveErrorCode {
  kInfeasible,
  kUnbounded,
  kTooLarge,
  kUncertified,
  kLevelSetEmpty,
};

/// Failure raised by the geometry and solver layers. Validation problems are
/// reported as data (see instance.hpp), not as exceptions.
class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  SolveErrorCode code() const noexcept { return code_; }

 private:
  SolveErrorCode code_;
};

/// True lexicographic order on coordinate vectors; used everywhere a
/// deterministic tie-break between points is needed.
inline bool lex_less(const Vector& a, const Vector& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace fmqp

#endif  // FMQP_COMMON_HPP_
