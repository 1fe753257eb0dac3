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

#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "distortion/errors.hpp"
#include "distortion/lp.hpp"
#include "distortion/sampling.hpp"
#include "oracles/brute_lp.hpp"
#include "oracles/fixtures.hpp"

using namespace distortion;

namespace {

void check_certificate(const LpProblem& lp, const LpSolution& s) {
  REQUIRE(s.status == LpStatus::kOptimal);
  REQUIRE(s.x.size() == lp.c.size());
  double value = 0.0;
  for (std::size_t j = 0; j < lp.c.size(); ++j) {
    CHECK(s.x[j] >= -1e-9);
    value += lp.c[j] * s.x[j];
  }
  CHECK(std::abs(value - s.objective) <= 1e-7);
  for (std::size_t i = 0; i < lp.b.size(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < lp.c.size(); ++j) lhs += lp.A(i, j) * s.x[j];
    CHECK(lhs <= lp.b[i] + 1e-7);
  }
}

}  // namespace

TEST_CASE("decoupled box") {
  Matrix A(2, 2);
  A(0, 1) = 1.0;
  A(1, 0) = 1.0;
  const LpProblem lp{A, {0.5, 0.5}, {1.0, 1.0}};
  const LpSolution s = solve(lp);
  check_certificate(lp, s);
  CHECK_NEAR(s.objective, 1.0, 1e-12);
  CHECK_NEAR(s.x[0], 0.5, 1e-12);
  CHECK_NEAR(s.x[1], 0.5, 1e-12);
  CHECK(s.tight == std::vector<std::size_t>{0, 1});
}

TEST_CASE("two candidate LP (B)") {
  Matrix M(2, 2);
  M(0, 1) = 0.5;
  M(1, 0) = 0.5;
  const LpSolution s = solve({M, {0.5, 0.5}, {1.0, 1.0}});
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK_NEAR(s.objective, 2.0, 1e-12);
  CHECK_NEAR(1.0 + 2.0 / s.objective, 2.0, 1e-12);
}

TEST_CASE("unbounded and infeasible") {
  CHECK(solve({Matrix(0, 1), {}, {1.0}}).status == LpStatus::kUnbounded);
  CHECK(solve({Matrix(1, 1, 0.0), {-1.0}, {1.0}}).status == LpStatus::kInfeasible);
  CHECK(solve({Matrix(1, 2, 1.0), {-1.0}, {0.0, 0.0}}).status == LpStatus::kInfeasible);
}

TEST_CASE("phase one reaches a feasible start") {
  // x1 + x2 >= 1, x1 <= 3, max -x1 - 2 x2  ->  x = (1, 0).
  Matrix A(2, 2);
  A(0, 0) = -1.0;
  A(0, 1) = -1.0;
  A(1, 0) = 1.0;
  const LpProblem lp{A, {-1.0, 3.0}, {-1.0, -2.0}};
  const LpSolution s = solve(lp);
  check_certificate(lp, s);
  CHECK_NEAR(s.objective, -1.0, 1e-12);
}

TEST_CASE("redundant equality rows") {
  // x1 + x2 = 1 written twice as a pair of inequalities.
  Matrix A(4, 2);
  for (std::size_t r = 0; r < 4; ++r) {
    const double sign = r % 2 == 0 ? 1.0 : -1.0;
    A(r, 0) = sign;
    A(r, 1) = sign;
  }
  const LpProblem lp{A, {1.0, -1.0, 1.0, -1.0}, {2.0, 1.0}};
  const LpSolution s = solve(lp);
  check_certificate(lp, s);
  CHECK_NEAR(s.objective, 2.0, 1e-12);
}

TEST_CASE("rejects malformed problems") {
  CHECK_THROWS_AS(solve({Matrix(2, 2), {1.0}, {1.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(solve({Matrix(1, 2), {1.0}, {1.0}}), DomainError);
  CHECK_THROWS_AS(solve({Matrix(1, 1, std::numeric_limits<double>::infinity()), {1.0}, {1.0}}),
                  DomainError);
  CHECK_THROWS_AS(solve({Matrix(1, 1), {std::nan("")}, {1.0}}), DomainError);
}

TEST_CASE("agrees with vertex enumeration") {
  std::mt19937_64 rng(seed_from_env());
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 500; ++trial) {
    const LpProblem lp = fixtures::random_small_lp(rng);
    const LpSolution s = solve(lp);
    const oracle::BruteLpResult ref = oracle::brute_force_lp(lp);
    INFO("trial " << trial);
    REQUIRE(s.status == ref.status);
    ++counts[static_cast<int>(s.status)];
    if (s.status == LpStatus::kOptimal) {
      check_certificate(lp, s);
      CHECK(std::abs(s.objective - ref.objective) <= 1e-6);
    }
  }
  // The generator must exercise every outcome.
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("weak duality against random feasible points") {
  std::mt19937_64 rng(seed_from_env() + 1);
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LpProblem lp = fixtures::random_small_lp(rng);
    const LpSolution s = solve(lp);
    if (s.status != LpStatus::kOptimal) continue;
    for (int k = 0; k < 50; ++k) {
      std::vector<double> x(lp.c.size());
      for (double& v : x) v = unit(rng);
      bool feasible = true;
      for (std::size_t i = 0; i < lp.b.size() && feasible; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.A(i, j) * x[j];
        feasible = lhs <= lp.b[i];
      }
      if (!feasible) continue;
      double value = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) value += lp.c[j] * x[j];
      CHECK(s.objective >= value - 1e-9);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("deterministic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LpProblem lp = fixtures::random_small_lp(rng);
    const LpSolution a = solve(lp);
    const LpSolution b = solve(lp);
    CHECK(a.status == b.status);
    CHECK(a.x == b.x);
    CHECK(a.pivots == b.pivots);
  }
}
