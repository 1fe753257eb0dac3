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
#include <vector>

#include <doctest.h>

#include "distortion/bounds.hpp"
#include "distortion/errors.hpp"
#include "distortion/mechanisms.hpp"
#include "distortion/sampling.hpp"
#include "oracles/fixtures.hpp"
#include "oracles/linalg.hpp"

using namespace distortion;

namespace {

// Comparisons matrix written directly from the block description.
oracle::Dense reference_matrix(int m, double a, double b, double c) {
  oracle::Dense M(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m), 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const int lo = std::min(i, j);
      const double above = lo == 0 ? a : lo == 1 ? b : lo == 2 ? c : 0.5;
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i < j ? above : 1.0 - above;
    }
  }
  return M;
}

std::vector<double> reference_plurality(int m, double a, double b) {
  std::vector<double> plu(static_cast<std::size_t>(m), 0.0);
  plu[0] = a;
  plu[1] = b;
  plu[2] = 1.0 - a - b;
  return plu;
}

std::vector<double> ones_minus(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = 1.0 - v[i];
  return out;
}

LowerBoundParams random_admissible(Rng& rng, int k) {
  std::uniform_real_distribution<double> ua(0.2, 0.7);
  std::uniform_real_distribution<double> uh(0.1, 0.5);
  for (;;) {
    LowerBoundParams p{ua(rng), uh(rng), k == 0 ? std::nullopt : std::optional<double>(uh(rng)), k};
    if (p.a + p.b < 1.0 && admissibility_violation(p).empty()) return p;
  }
}

double case_reference(Case which, double x, double y, double z) {
  const oracle::Dense M{{0.0, x, 1.0 - y}, {1.0 - x, 0.0, z}, {y, 1.0 - z, 0.0}};
  std::vector<double> plu;
  switch (which) {
    case Case::kI: plu = {1.0 - y, z, y - z}; break;
    case Case::kII: plu = {x, z, 1.0 - x - z}; break;
    case Case::kIII: plu = {x, 1.0 - x, 0.0}; break;
  }
  return *oracle::ones_inverse_dot(M, ones_minus(plu));
}

}  // namespace

TEST_CASE("lower-bound elections match the block form") {
  for (const BoundRow& row : published_table()) {
    if (!row.m || *row.m > kMaxExplicitCandidates) continue;
    const int m = *row.m;
    const LowerBoundParams params{row.a, row.b, row.c, m - 3};
    const Election e = build_lower_bound_election(m, params);
    const Matrix M = comparisons_matrix(e);
    const oracle::Dense ref = reference_matrix(m, row.a, row.b, row.c.value_or(0.0));
    INFO("m = " << m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        CHECK_NEAR(M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                   ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1e-9);
      }
    }
    const std::vector<double> plu = plurality_vector(e);
    const std::vector<double> plu_ref = reference_plurality(m, row.a, row.b);
    for (int i = 0; i < m; ++i) CHECK_NEAR(plu[static_cast<std::size_t>(i)], plu_ref[static_cast<std::size_t>(i)], 1e-9);
  }
}

TEST_CASE("m = 3 row is the tight three-candidate election") {
  const Election e = build_lower_bound_election(3, {0.473356, 0.423961, std::nullopt, 0});
  const Election ref = fixtures::tight3();
  REQUIRE(e.type_count() == ref.type_count());
  for (std::size_t t = 0; t < ref.type_count(); ++t) {
    bool found = false;
    for (std::size_t u = 0; u < e.type_count(); ++u) {
      if (e.type(u).ranking == ref.type(t).ranking) {
        found = true;
        CHECK_NEAR(e.weight(u), ref.weight(t), 1e-12);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("m = 4 permutation weights") {
  const double a = 0.459994, b = 0.406749, c = 0.363254;
  const Election e = build_lower_bound_election(4, {a, b, c, 1});
  double w1432 = 0.0;
  for (std::size_t t = 0; t < e.type_count(); ++t) {
    if (e.type(t).ranking == std::vector<int>{1, 4, 3, 2}) w1432 = e.weight(t);
  }
  CHECK_NEAR(w1432, 0.337931, 1e-6);
  CHECK_NEAR(w1432, a * (1.0 - c) / (a + b), 1e-12);
}

TEST_CASE("lower-bound construction errors") {
  CHECK_THROWS_AS(build_lower_bound_election(4, {0.3, 0.3, 0.3, 1}), DomainError);
  CHECK_THROWS_AS(build_lower_bound_election(5, {0.459994, 0.406749, 0.363254, 1}), DomainError);
  CHECK_THROWS_AS(build_lower_bound_election(11, {0.44, 0.39, 0.39, 8}), DomainError);
  CHECK_THROWS_AS(build_lower_bound_election(4, {0.459994, 0.406749, std::nullopt, 1}), DomainError);
  CHECK_THROWS_AS(beta({0.5, 0.6, 0.3, 1}), DomainError);
  CHECK_FALSE(admissibility_violation({0.3, 0.3, 0.3, 1}).empty());
  CHECK(admissibility_violation({0.459994, 0.406749, 0.363254, 1}).empty());
}

TEST_CASE("closed forms agree with numeric inversion") {
  Rng rng(seed_from_env() + 21);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 8;
    const LowerBoundParams p = random_admissible(rng, k);
    const int m = k + 3;
    const oracle::Dense M = reference_matrix(m, p.a, p.b, p.c.value_or(0.0));
    const std::vector<double> sums = m_inverse_column_sums(p);
    const auto ref = oracle::column_sums_of_inverse(M);
    REQUIRE(ref);
    INFO("trial " << trial << " k " << k);
    REQUIRE(sums.size() == ref->size());
    for (std::size_t j = 0; j < sums.size(); ++j) {
      CHECK_NEAR(sums[j], (*ref)[j], 1e-8);
      CHECK(sums[j] > 0.0);
    }
    const double expected = *oracle::ones_inverse_dot(M, ones_minus(reference_plurality(m, p.a, p.b)));
    CHECK_NEAR(beta(p), expected, 1e-8);
  }
}

TEST_CASE("beta at the published parameters") {
  CHECK_NEAR(beta({0.473356, 0.423961, std::nullopt, 0}), 1.94907, 1e-5);
  CHECK_NEAR(beta({0.459994, 0.406749, 0.363254, 1}), 1.90554, 1e-5);
  CHECK_NEAR(beta({0.440434, 0.392546, 0.387236, 7}), 1.83654, 1e-5);
  CHECK_NEAR(beta_limit(0.429505, 0.388082, 0.397166), 1.79753, 1e-5);
  CHECK_NEAR(beta({0.429608, 0.388115, 0.397081, 997}), 1.79790, 1e-4);
  for (const double s : m_inverse_column_sums({0.459994, 0.406749, 0.363254, 1})) CHECK(s > 0.0);
}

TEST_CASE("beta approaches its limit") {
  const double a = 0.429505, b = 0.388082, c = 0.397166;
  CHECK_NEAR(beta({a, b, c, 1000000}), beta_limit(a, b, c), 1e-5);
  double previous = 10.0;
  for (int k = 1; k <= 4096; k *= 2) {
    const double v = beta({a, b, c, k});
    CHECK(v < previous);
    previous = v;
  }
}

TEST_CASE("LP (B) on the lower-bound elections stays below beta") {
  Rng rng(seed_from_env() + 22);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = trial % 5;
    const LowerBoundParams p = random_admissible(rng, k);
    if (p.c && p.a + p.b + *p.c < 1.0) continue;
    const MechanismResult r = lp_b_lottery(build_lower_bound_election(k + 3, p));
    REQUIRE(r.beta);
    INFO("trial " << trial);
    CHECK(*r.beta <= beta(p) + 1e-6);
  }
  for (const BoundRow& row : published_table()) {
    if (!row.m || *row.m > kMaxExplicitCandidates) continue;
    const MechanismResult r = lp_b_lottery(build_lower_bound_election(*row.m, {row.a, row.b, row.c, *row.m - 3}));
    CHECK_NEAR(*r.beta, row.beta, 1e-5);
  }
}

TEST_CASE("optimize_beta reproduces the table") {
  const BoundRow r3 = optimize_beta(0);
  CHECK_NEAR(r3.beta, 1.94907, 1e-4);
  CHECK_NEAR(r3.distortion_lb, 2.02613, 1e-4);
  const BoundRow r5 = optimize_beta(2);
  CHECK_NEAR(r5.beta, 1.88106, 1e-4);
  CHECK_NEAR(r5.distortion_lb, 2.06323, 1e-4);
  const BoundRow inf = optimize_beta(std::nullopt);
  CHECK_FALSE(inf.m);
  CHECK_NEAR(inf.beta, 1.79753, 1e-4);
  CHECK_NEAR(inf.distortion_lb, 2.11264, 1e-4);
  CHECK(admissibility_violation_limit(inf.a, inf.b, *inf.c).empty());
}

TEST_CASE("table distortion is bracketed and nondecreasing") {
  double previous = 2.0;
  for (const BoundRow& row : published_table()) {
    CHECK(row.distortion_lb > 2.0);
    CHECK(row.distortion_lb <= 2.11264 + 1e-4);
    CHECK(row.distortion_lb >= previous);
    CHECK_NEAR(row.distortion_lb, 1.0 + 2.0 / row.beta, 1e-5);
    previous = row.distortion_lb;
  }
}

TEST_CASE("case objectives at closed-form spot values") {
  const double s6 = std::sqrt(6.0);
  CHECK_NEAR(case_objective(Case::kI, 0.5, 3.0 - s6, s6 - 2.0), s6 - 0.5, 1e-8);
  CHECK_NEAR(case_objective(Case::kII, 1.0 / 3, 1.0 / 3, 1.0 / 3), 2.0, 1e-8);
  CHECK_NEAR(case_objective(Case::kIII, 0.5, 0.5, 0.5), 2.0, 1e-8);
  for (const double x : {0.2, 0.35, 0.6, 0.8}) {
    CHECK_NEAR(case_objective(Case::kIII, x, 1.0 - x, 1.0 - x), 1.0 / (x * (1.0 - x)) - 2.0, 1e-8);
  }
  CHECK_THROWS_AS(case_objective(Case::kI, 1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("case objectives match generic evaluation") {
  Rng rng(seed_from_env() + 23);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (const Case which : {Case::kI, Case::kII, Case::kIII}) {
    int hits = 0;
    while (hits < 100) {
      const double x = u(rng), y = u(rng), z = u(rng);
      if (!in_case_region(which, x, y, z)) continue;
      ++hits;
      INFO(to_string(which) << " at " << x << ", " << y << ", " << z);
      CHECK_NEAR(case_objective(which, x, y, z), case_reference(which, x, y, z), 1e-8);
    }
  }
}

TEST_CASE("case minima") {
  const CaseMinimum one = minimize_case(Case::kI);
  CHECK_NEAR(one.value, 1.94907, 1e-3);
  CHECK(in_case_region(Case::kI, one.x, one.y, one.z, 1e-9));
  // The region's boundary x + y = 1 contains the m = 3 lower-bound election,
  // so the constrained minimum sits there rather than at the interior 2.
  const CaseMinimum two = minimize_case(Case::kII);
  CHECK_NEAR(two.value, 1.949074, 1e-4);
  CHECK(two.value < case_objective(Case::kII, 1.0 / 3, 1.0 / 3, 1.0 / 3));
  const CaseMinimum three = minimize_case(Case::kIII);
  CHECK_NEAR(three.value, 2.0, 1e-4);
  CHECK_NEAR(three.x, 0.5, 1e-2);
}

TEST_CASE("upper-bound constants") {
  const UpperBoundConstants k = ub_0123_constants();
  const double y = k.y_star;
  CHECK(std::abs(y * y * y - y * y + 2.0 * y - 1.0) < 1e-10);
  CHECK_NEAR(y, 0.56984, 1e-5);
  CHECK_NEAR(k.objective_lb, 1.75487, 1e-5);
  CHECK_NEAR(1.0 + std::sqrt(y), 1.0 / y, 1e-9);
  CHECK_NEAR(k.distortion_ub, 2.13968, 1e-5);
  CHECK_NEAR(k.improved_objective_lb, 1.76129, 1e-5);
  CHECK_NEAR(k.improved_distortion_ub, 2.13553, 1e-5);
}

TEST_CASE("clevermatrix bound") {
  CHECK(clevermatrix_bound(std::vector<double>{0.0, 0.0, 0.0}) == 2.0);
  CHECK_NEAR(clevermatrix_bound(std::vector<double>{0.6, 0.8}), 1.0, 1e-12);
  CHECK_THROWS_AS(clevermatrix_bound(std::vector<double>{0.9, 0.9}), DomainError);
  CHECK_THROWS_AS(clevermatrix_bound(std::vector<double>{-0.1}), DomainError);
}

TEST_CASE("sum of p bound on random tournaments") {
  Rng rng(seed_from_env() + 24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int solved = 0;
  for (int trial = 0; trial < 3000 && solved < 200; ++trial) {
    const int m = 2 + trial % 5;
    const auto n = static_cast<std::size_t>(m);
    oracle::Dense M(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        M[i][j] = u(rng);
        M[j][i] = 1.0 - M[i][j];
      }
    }
    std::vector<double> x = random_simplex_point(rng, n);
    const double shrink = u(rng);
    for (double& v : x) v *= shrink;
    const auto p = oracle::solve_linear(M, ones_minus(x));
    if (!p) continue;
    bool nonnegative = true;
    double total = 0.0;
    for (double v : *p) {
      nonnegative = nonnegative && v >= 0.0;
      total += v;
    }
    if (!nonnegative) continue;
    ++solved;
    CHECK(total >= clevermatrix_bound(x) - 1e-9);
  }
  CHECK(solved >= 100);
}
