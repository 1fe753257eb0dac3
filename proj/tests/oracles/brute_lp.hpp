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

// Reference LP solver by vertex enumeration, for tiny problems only.

#ifndef DISTORTION_TESTS_ORACLES_BRUTE_LP_HPP_
#define DISTORTION_TESTS_ORACLES_BRUTE_LP_HPP_

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "distortion/lp.hpp"
#include "oracles/linalg.hpp"

namespace oracle {

struct BruteLpResult {
  distortion::LpStatus status = distortion::LpStatus::kInfeasible;
  double objective = 0.0;
};

// max c.x over the vertices of {A x <= b, x >= 0}; nullopt if there are none.
inline std::optional<double> best_vertex(const distortion::Matrix& A, const std::vector<double>& b,
                                         const std::vector<double>& c) {
  const std::size_t n = c.size();
  const std::size_t r = b.size();
  // Hyperplanes: rows of A, then x_j = 0.
  auto plane = [&](std::size_t h, std::vector<double>& row, double& rhs) {
    row.assign(n, 0.0);
    if (h < r) {
      for (std::size_t j = 0; j < n; ++j) row[j] = A(h, j);
      rhs = b[h];
    } else {
      row[h - r] = 1.0;
      rhs = 0.0;
    }
  };
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  const std::size_t total = r + n;
  if (n > total) return best;
  for (;;) {
    Dense system(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (std::size_t k = 0; k < n; ++k) plane(pick[k], system[k], rhs[k]);
    if (auto x = solve_linear(system, rhs)) {
      bool feasible = true;
      for (double v : *x) feasible = feasible && v >= -1e-9;
      for (std::size_t i = 0; i < r && feasible; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += A(i, j) * (*x)[j];
        feasible = lhs <= b[i] + 1e-9;
      }
      if (feasible) {
        double value = 0.0;
        for (std::size_t j = 0; j < n; ++j) value += c[j] * (*x)[j];
        if (!best || value > *best) best = value;
      }
    }
    // Next n-combination of [0, total).
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

inline BruteLpResult brute_force_lp(const distortion::LpProblem& lp) {
  const auto best = best_vertex(lp.A, lp.b, lp.c);
  // {x >= 0} contains no line, so a nonempty feasible set has a vertex.
  if (!best) return {distortion::LpStatus::kInfeasible, 0.0};
  // Unbounded iff some recession direction d >= 0, A d <= 0 improves c.
  distortion::Matrix cone(lp.A.rows() + 1, lp.c.size());
  std::vector<double> zero(lp.A.rows() + 1, 0.0);
  for (std::size_t i = 0; i < lp.A.rows(); ++i) {
    for (std::size_t j = 0; j < lp.c.size(); ++j) cone(i, j) = lp.A(i, j);
  }
  for (std::size_t j = 0; j < lp.c.size(); ++j) cone(lp.A.rows(), j) = 1.0;
  zero.back() = 1.0;
  const auto ray = best_vertex(cone, zero, lp.c);
  if (ray && *ray > 1e-9) return {distortion::LpStatus::kUnbounded, 0.0};
  return {distortion::LpStatus::kOptimal, *best};
}

}  // namespace oracle

#endif  // DISTORTION_TESTS_ORACLES_BRUTE_LP_HPP_
