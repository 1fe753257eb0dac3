// Copyright 2026 The Authors.
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

#ifndef DISTORTION_LP_HPP_
#define DISTORTION_LP_HPP_

#include <cstddef>
#include <vector>

#include "distortion/matrix.hpp"

namespace distortion {

// maximize c.x subject to A x <= b, x >= 0.
struct LpProblem {
  Matrix A;
  std::vector<double> b;
  std::vector<double> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;            // meaningful iff kOptimal
  std::vector<double> x;             // empty unless kOptimal
  std::vector<std::size_t> tight;    // rows with b_i - A_i x <= feasibility tolerance
  std::size_t pivots = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  std::size_t max_pivots = 1'000'000;
};

// Dense two-phase simplex: smallest-index entering rule, a two-pass
// ratio test, and periodic refactorization from the original data.
// Deterministic. Throws DomainError on inconsistent dimensions or
// non-finite data.
LpSolution solve(const LpProblem& lp, const SimplexOptions& options = {});

const char* to_string(LpStatus status);

}  // namespace distortion

#endif  // DISTORTION_LP_HPP_
