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

#include "distortion/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "distortion/errors.hpp"
#include "distortion/lp.hpp"
#include "internal.hpp"

namespace distortion {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Variables: d(i,t) at (i-1)*T + t, then one D(i,j) per pair i<j standing
// for min_u d(i,u) + d(j,u). The two families
//   D(i,j) <= d(i,u) + d(j,u)          for all u
//   d(j,v) <= D(i,j) + d(i,v)          for all ordered i != j and v
// are together equivalent to every 3-hop constraint
//   d(j,v) <= d(j,u) + d(i,u) + d(i,v).
class AdversaryLp {
 public:
  AdversaryLp(const Election& election, const Lottery& lottery)
      : m_(static_cast<std::size_t>(election.candidates())),
        types_(election.type_count()),
        pairs_(m_ * (m_ - 1) / 2),
        base_(0, variables()) {
    // Ordinal consistency between consecutive candidates of each ranking.
    for (std::size_t t = 0; t < types_; ++t) {
      const auto& ranking = election.type(t).ranking;
      for (std::size_t k = 0; k + 1 < ranking.size(); ++k) {
        auto row = blank();
        row[d(ranking[k], t)] = 1.0;
        row[d(ranking[k + 1], t)] = -1.0;
        add(base_, base_rhs_, row, 0.0);
      }
    }
    for (int i = 1; i <= static_cast<int>(m_); ++i) {
      for (int j = i + 1; j <= static_cast<int>(m_); ++j) {
        for (std::size_t u = 0; u < types_; ++u) {
          auto row = blank();
          row[pair(i, j)] = 1.0;
          row[d(i, u)] -= 1.0;
          row[d(j, u)] -= 1.0;
          add(base_, base_rhs_, row, 0.0);
        }
      }
    }
    for (int i = 1; i <= static_cast<int>(m_); ++i) {
      for (int j = 1; j <= static_cast<int>(m_); ++j) {
        if (i == j) continue;
        for (std::size_t v = 0; v < types_; ++v) {
          auto row = blank();
          row[d(j, v)] = 1.0;
          row[pair(i, j)] = -1.0;
          row[d(i, v)] = -1.0;
          add(base_, base_rhs_, row, 0.0);
        }
      }
    }
    objective_ = blank();
    for (int i = 1; i <= static_cast<int>(m_); ++i) {
      for (std::size_t t = 0; t < types_; ++t) {
        objective_[d(i, t)] = lottery.probability(i) * election.weight(t);
      }
    }
    weights_.resize(types_);
    for (std::size_t t = 0; t < types_; ++t) weights_[t] = election.weight(t);
  }

  // SC(reference) = 1 and SC(j) >= 1 for every other j.
  LpProblem with_reference(int reference) const {
    LpProblem lp{base_, base_rhs_, objective_};
    for (int j = 1; j <= static_cast<int>(m_); ++j) {
      auto row = blank();
      for (std::size_t t = 0; t < types_; ++t) row[d(j, t)] = -weights_[t];
      if (j == reference) {
        auto upper = row;
        for (double& v : upper) v = -v;
        add(lp.A, lp.b, upper, 1.0);
      }
      add(lp.A, lp.b, row, -1.0);
    }
    return lp;
  }

  Matrix distances(const std::vector<double>& x) const {
    Matrix out(m_, types_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t t = 0; t < types_; ++t) out(i, t) = std::max(0.0, x[i * types_ + t]);
    }
    return out;
  }

 private:
  std::size_t variables() const { return m_ * types_ + pairs_; }
  std::vector<double> blank() const { return std::vector<double>(variables(), 0.0); }
  std::size_t d(int candidate, std::size_t t) const {
    return static_cast<std::size_t>(candidate - 1) * types_ + t;
  }
  std::size_t pair(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto a = static_cast<std::size_t>(i - 1);
    const auto b = static_cast<std::size_t>(j - 1);
    // Row-major index of (a, b) in the strict upper triangle.
    return m_ * types_ + a * m_ - a * (a + 1) / 2 + (b - a - 1);
  }
  static void add(Matrix& a, std::vector<double>& rhs, const std::vector<double>& row, double b) {
    a.append_row(row);
    rhs.push_back(b);
  }

  std::size_t m_;
  std::size_t types_;
  std::size_t pairs_;
  Matrix base_;
  std::vector<double> base_rhs_;
  std::vector<double> objective_;
  std::vector<double> weights_;
};

// 2 * sum_{j not in I} s_{I>j} p_j <= 1 - plu(I) over every nonempty proper I.
LpProblem generalized_constraints(const Election& election) {
  const int m = election.candidates();
  LpProblem lp{Matrix(0, static_cast<std::size_t>(m)), {},
               std::vector<double>(static_cast<std::size_t>(m), 1.0)};
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const CoalitionStats stats = coalition_stats(election, CandidateSet::from_mask(mask));
    std::vector<double> row = stats.s_over;
    for (double& v : row) v *= 2.0;
    lp.A.append_row(row);
    lp.b.push_back(1.0 - stats.plu);
  }
  return lp;
}

// A candidate ranked below some fixed rival by every voter, or 0.
int unanimously_beaten(const Election& election) {
  const Matrix M = comparisons_matrix(election);
  const int m = election.candidates();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i != j && M(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) >=
                        1.0 - 1e-12) {
        return i;
      }
    }
  }
  return 0;
}

}  // namespace

AdversaryResult worst_case_distortion(const Election& election, const Lottery& lottery) {
  if (lottery.candidates() != election.candidates()) {
    throw DomainError("lottery has " + std::to_string(lottery.candidates()) +
                      " entries for an election with " + std::to_string(election.candidates()) +
                      " candidates");
  }
  const AdversaryLp adversary(election, lottery);
  AdversaryResult result;
  result.distortion = -kInf;
  std::vector<double> best_x;
  for (int reference = 1; reference <= election.candidates(); ++reference) {
    const LpSolution solution = solve(adversary.with_reference(reference));
    if (solution.status == LpStatus::kUnbounded) {
      return {kInf, std::nullopt, reference};
    }
    if (solution.status != LpStatus::kOptimal) {
      // The all-ones metric is feasible for every reference.
      throw std::logic_error("adversary LP infeasible for reference " + std::to_string(reference));
    }
    if (solution.objective > result.distortion) {
      result.distortion = solution.objective;
      result.reference = reference;
      best_x = solution.x;
    }
  }
  result.witness = close_metric(MetricSpace(election, adversary.distances(best_x)));
  return result;
}

MechanismResult optimal_lottery_m3(const Election& election) {
  const int m = election.candidates();
  if (m != 3 && m != 2) {
    throw DomainError("optimal_lottery_m3 needs 3 candidates, got " + std::to_string(m));
  }
  const LpProblem lp = generalized_constraints(election);
  const int loser = m == 3 ? unanimously_beaten(election) : 0;
  if (loser == 0) {
    MechanismResult result = internal::lottery_from_lp("optimal3", lp, Convention::kOnePlusInverse,
                                                       Scope::kAllMetrics);
    return result;
  }

  // Drop the unanimously beaten candidate, solve the two-candidate
  // instance, and lift the lottery back with zero mass on the loser.
  MechanismResult reduced = optimal_lottery_m3(election.without_candidate(loser));
  std::vector<double> p;
  auto reduced_p = reduced.lottery.probabilities();
  for (int c = 1, k = 0; c <= m; ++c) {
    p.push_back(c == loser ? 0.0 : reduced_p[static_cast<std::size_t>(k++)]);
  }
  MechanismResult result = reduced;
  result.lottery = Lottery::from_probabilities(p);
  result.tight_constraints.clear();
  if (reduced.beta && std::isfinite(*reduced.beta)) {
    for (std::size_t r = 0; r < lp.A.rows(); ++r) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < p.size(); ++j) lhs += lp.A(r, j) * p[j] * *reduced.beta;
      if (lp.b[r] - lhs <= 1e-7) result.tight_constraints.push_back(r);
    }
  }
  return result;
}

DominanceReport check_biased_dominance(const MetricSpace& metric, double tolerance) {
  const ValidationReport report = validate_metric(metric);
  if (!report.ok()) {
    throw DomainError("metric is invalid: " + report.violations.front().message);
  }
  const std::vector<double> costs = social_costs(metric);
  const auto star = static_cast<std::size_t>(
      std::min_element(costs.begin(), costs.end()) - costs.begin());
  const Matrix closure = candidate_closure(metric);
  std::vector<double> x(costs.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = j == star ? 0.0 : closure(j, star);

  MetricSpace biased = build_biased(metric.election(), x);
  std::vector<double> biased_costs = social_costs(biased);
  const double optimum_slack = costs[star] - biased_costs[star];
  double gap_slack = kInf;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (i == star) continue;
    gap_slack = std::min(gap_slack, (biased_costs[i] - biased_costs[star]) - (costs[i] - costs[star]));
  }
  if (costs.size() == 1) gap_slack = 0.0;
  const bool holds = optimum_slack >= -tolerance && gap_slack >= -tolerance;
  return {static_cast<int>(star) + 1, std::move(biased), costs, std::move(biased_costs),
          optimum_slack, gap_slack, holds};
}

}  // namespace distortion
