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

#ifndef DISTORTION_TESTS_ORACLES_FIXTURES_HPP_
#define DISTORTION_TESTS_ORACLES_FIXTURES_HPP_

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/lp.hpp"
#include "distortion/matrix.hpp"
#include "oracles/linalg.hpp"

// Absolute-tolerance check that reports both values on failure.
#define CHECK_NEAR(actual, expected, tol)                            \
  do {                                                               \
    const double actual_ = (actual);                                 \
    const double expected_ = (expected);                             \
    INFO(#actual " = " << actual_ << ", expected " << expected_);    \
    CHECK(std::abs(actual_ - expected_) <= (tol));                   \
  } while (0)

namespace fixtures {

using distortion::Election;

// Three-candidate worst case at table precision (47.3% / 42.4% / 10.3%).
inline Election tight3() {
  return Election::create(3, {{{1, 3, 2}, 0.473356}, {{2, 3, 1}, 0.423961}, {{3, 2, 1}, 0.102683}});
}

inline Election half_half() { return Election::create(2, {{{1, 2}, 0.5}, {{2, 1}, 0.5}}); }

inline Election condorcet_cycle() {
  return Election::create(3, {{{1, 2, 3}, 1.0 / 3}, {{2, 3, 1}, 1.0 / 3}, {{3, 1, 2}, 1.0 / 3}});
}

inline Election unanimous(int m) {
  std::vector<int> ranking(static_cast<std::size_t>(m));
  std::iota(ranking.begin(), ranking.end(), 1);
  return Election::create(m, {{ranking, 1.0}});
}

inline oracle::Dense dense(const distortion::Matrix& m) {
  oracle::Dense out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

// Random LP with n <= 4 variables and r <= 8 rows; coefficients on a
// coarse grid so degenerate and tied vertices show up regularly.
inline distortion::LpProblem random_small_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_int_distribution<int> r_dist(1, 8);
  std::uniform_int_distribution<int> coef(-4, 6);
  std::uniform_int_distribution<int> rhs(-2, 8);
  std::uniform_int_distribution<int> obj(-3, 5);
  const auto n = static_cast<std::size_t>(n_dist(rng));
  const auto r = static_cast<std::size_t>(r_dist(rng));
  distortion::LpProblem lp{distortion::Matrix(r, n), std::vector<double>(r), std::vector<double>(n)};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = coef(rng) / 2.0;
    lp.b[i] = rhs(rng) / 2.0;
  }
  for (double& v : lp.c) v = obj(rng) / 2.0;
  return lp;
}

}  // namespace fixtures

#endif  // DISTORTION_TESTS_ORACLES_FIXTURES_HPP_
