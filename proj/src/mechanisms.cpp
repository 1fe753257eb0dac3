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

#include "distortion/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "distortion/errors.hpp"
#include "distortion/lp.hpp"
#include "internal.hpp"

namespace distortion {

const char* to_string(Convention convention) {
  switch (convention) {
    case Convention::kOnePlusInverse: return "1+1/beta";
    case Convention::kOnePlusTwiceInverse: return "1+2/beta";
    case Convention::kPluralityNorm: return "3-2|plu|^2";
    case Convention::kConstantThree: return "3";
  }
  return "unknown";
}

const char* to_string(Scope scope) {
  switch (scope) {
    case Scope::kListedMetrics: return "listed metrics";
    case Scope::kZeroOneTwoThreeMetrics: return "(0,1,2,3)-metrics; all metrics conjectural";
    case Scope::kAllMetrics: return "all metrics";
  }
  return "unknown";
}

namespace internal {

MechanismResult lottery_from_lp(std::string name, const LpProblem& lp, Convention convention,
                                Scope scope) {
  const int m = static_cast<int>(lp.c.size());
  const double factor = convention == Convention::kOnePlusInverse ? 1.0 : 2.0;
  const LpSolution solution = solve(lp);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  if (solution.status == LpStatus::kInfeasible) {
    // p = 0 is always feasible for these systems.
    throw std::logic_error(name + ": LP reported infeasible");
  }
  if (solution.status == LpStatus::kUnbounded) {
    // Constraint rows are nonnegative, so unboundedness means some
    // candidates appear in no constraint; any of them is optimal.
    std::vector<double> p(lp.c.size(), 0.0);
    double count = 0.0;
    for (std::size_t j = 0; j < lp.c.size(); ++j) {
      bool free = true;
      for (std::size_t i = 0; i < lp.A.rows(); ++i) free = free && lp.A(i, j) <= 1e-12;
      if (free) {
        p[j] = 1.0;
        count += 1.0;
      }
    }
    if (count == 0.0) throw std::logic_error(name + ": unbounded LP without a free column");
    for (double& v : p) v /= count;
    return {std::move(name), Lottery::from_probabilities(std::move(p)), kInf, 1.0, convention,
            scope, {}};
  }

  const double beta = solution.objective;
  if (beta <= 1e-12) {
    return {std::move(name), Lottery::uniform(m), 0.0, kInf, convention, scope, solution.tight};
  }
  std::vector<double> p = solution.x;
  for (double& v : p) v = std::max(0.0, v) / beta;
  return {std::move(name), Lottery::from_probabilities(std::move(p)), beta,
          1.0 + factor / beta, convention, scope, solution.tight};
}

}  // namespace internal

namespace {

bool same_election(const Election& a, const Election& b) {
  if (a.candidates() != b.candidates() || a.type_count() != b.type_count()) return false;
  for (std::size_t t = 0; t < a.type_count(); ++t) {
    if (a.type(t).ranking != b.type(t).ranking) return false;
    if (std::abs(a.weight(t) - b.weight(t)) > 1e-12) return false;
  }
  return true;
}

}  // namespace

MechanismResult lp_a_lottery(const Election& election, std::span<const MetricSpace> metrics) {
  const auto m = static_cast<std::size_t>(election.candidates());
  LpProblem lp{Matrix(0, m), {}, std::vector<double>(m, 1.0)};
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    const MetricSpace& metric = metrics[k];
    if (!same_election(metric.election(), election)) {
      throw DomainError("metric " + std::to_string(k + 1) + " is defined over a different election");
    }
    const ValidationReport report = validate_metric(metric);
    if (!report.ok()) {
      throw DomainError("metric " + std::to_string(k + 1) + " is invalid: " +
                        report.violations.front().message);
    }
    const std::vector<double> sc = social_costs(metric);
    const double best = *std::min_element(sc.begin(), sc.end());
    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = sc[i] - best;
    lp.A.append_row(row);
    lp.b.push_back(best);
  }
  return internal::lottery_from_lp("lpA", lp, Convention::kOnePlusInverse, Scope::kListedMetrics);
}

MechanismResult lp_b_lottery(const Election& election) {
  const auto m = static_cast<std::size_t>(election.candidates());
  const std::vector<double> plu = plurality_vector(election);
  LpProblem lp{comparisons_matrix(election), std::vector<double>(m), std::vector<double>(m, 1.0)};
  for (std::size_t i = 0; i < m; ++i) lp.b[i] = 1.0 - plu[i];
  return internal::lottery_from_lp("lpB", lp, Convention::kOnePlusTwiceInverse,
                                   Scope::kZeroOneTwoThreeMetrics);
}

MechanismResult lp_c_lottery(const Election& election) {
  const int m = election.candidates();
  if (m > kLpCMaxCandidates) {
    throw DomainError("LP (C) enumerates every coalition and supports at most " +
                      std::to_string(kLpCMaxCandidates) + " candidates, got " + std::to_string(m));
  }
  LpProblem lp{Matrix(0, static_cast<std::size_t>(m)), {},
               std::vector<double>(static_cast<std::size_t>(m), 1.0)};
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const CandidateSet coalition = CandidateSet::from_mask(mask);
    const CandidateSet rest = coalition.complement(m);
    double strongest = 0.0;
    for (int i : coalition.members()) {
      strongest = std::max(strongest, share_above(election, CandidateSet{i}, rest));
    }
    lp.A.append_row(coalition_stats(election, coalition).s_over);
    lp.b.push_back(1.0 - strongest);
  }
  return internal::lottery_from_lp("lpC", lp, Convention::kOnePlusTwiceInverse, Scope::kAllMetrics);
}

MechanismResult smart_dictatorship(const Election& election) {
  const int m = election.candidates();
  const std::vector<double> plu = plurality_vector(election);
  double norm2 = 0.0;
  for (double v : plu) norm2 += v * v;
  const double guarantee = 3.0 - 2.0 * norm2;
  for (int i = 1; i <= m; ++i) {
    if (plu[static_cast<std::size_t>(i - 1)] >= 1.0 - 1e-12) {
      return {"smart", Lottery::point_mass(m, i), std::numeric_limits<double>::infinity(),
              guarantee, Convention::kPluralityNorm, Scope::kAllMetrics, {}};
    }
  }
  std::vector<double> q(plu.size());
  double total = 0.0;
  for (std::size_t i = 0; i < plu.size(); ++i) {
    q[i] = plu[i] / (1.0 - plu[i]);
    total += q[i];
  }
  for (double& v : q) v /= total;
  return {"smart", Lottery::from_probabilities(std::move(q)), total, guarantee,
          Convention::kPluralityNorm, Scope::kAllMetrics, {}};
}

MechanismResult random_dictatorship(const Election& election) {
  return {"random", Lottery::from_probabilities(plurality_vector(election)), std::nullopt, 3.0,
          Convention::kConstantThree, Scope::kAllMetrics, {}};
}

}  // namespace distortion
