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

#include "distortion/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "distortion/errors.hpp"

namespace distortion {
namespace {

// Condensed (dictionary) tableau: each row reads
//   basic[i] + sum_j a(i, j) * nonbasic[j] = rhs[i]
// and the objective reads z = z0 + sum_j cost[j] * nonbasic[j].
// Variable ids: [0, n) structural, [n, n + r) slacks, n + r the phase-one
// auxiliary variable.
//
// Pivoting accumulates round-off on degenerate problems, so the dictionary
// is periodically rebuilt from the original data for the current basis,
// and always once more before optimality or unboundedness is reported.
class Dictionary {
 public:
  static constexpr double kConfirmPivot = 1e-6;
  static constexpr double kRelativePivot = 0.1;

  Dictionary(const LpProblem& lp, bool with_auxiliary)
      : lp_(lp),
        n_(lp.c.size()),
        rows_(lp.b.size()),
        cols_(lp.c.size() + (with_auxiliary ? 1 : 0)),
        a_(rows_, cols_),
        rhs_(lp.b),
        cost_(cols_, 0.0),
        basic_(rows_),
        nonbasic_(cols_),
        alive_(rows_, true),
        enterable_(cols_, true),
        objective_(n_ + rows_ + 1, 0.0),
        refresh_interval_(std::max<std::size_t>(50, rows_)) {
    for (std::size_t i = 0; i < rows_; ++i) {
      basic_[i] = n_ + i;
      for (std::size_t j = 0; j < n_; ++j) a_(i, j) = lp.A(i, j);
      if (with_auxiliary) a_(i, n_) = -1.0;
    }
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    if (with_auxiliary) nonbasic_[n_] = n_ + rows_;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double rhs(std::size_t i) const { return rhs_[i]; }
  double z0() const { return z0_; }
  std::size_t basic(std::size_t i) const { return basic_[i]; }
  std::size_t nonbasic(std::size_t j) const { return nonbasic_[j]; }
  bool alive(std::size_t i) const { return alive_[i]; }
  double coefficient(std::size_t i, std::size_t j) const { return a_(i, j); }
  std::size_t pivots() const { return pivots_; }

  void kill_row(std::size_t i) { alive_[i] = false; }
  void forbid_column(std::size_t j) { enterable_[j] = false; }

  // Sets the objective from coefficients indexed by variable id.
  void set_objective(std::vector<double> by_id) {
    objective_ = std::move(by_id);
    price();
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / a_(row, col);
    auto pivot_row = a_.row(row);
    for (std::size_t j = 0; j < cols_; ++j) pivot_row[j] *= inv;
    pivot_row[col] = inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !alive_[i]) continue;
      const double f = a_(i, col);
      if (f == 0.0) continue;
      auto r = a_.row(i);
      for (std::size_t j = 0; j < cols_; ++j) r[j] -= f * pivot_row[j];
      r[col] = -f * inv;
      rhs_[i] -= f * rhs_[row];
    }
    const double f = cost_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= f * pivot_row[j];
      cost_[col] = -f * inv;
      z0_ += f * rhs_[row];
    }
    std::swap(basic_[row], nonbasic_[col]);
    ++pivots_;
  }

  // Recomputes coefficients, right-hand sides and costs from the original
  // problem: [a | rhs] = B^-1 [N | b] by elimination with partial pivoting.
  void refresh() {
    Matrix work(rows_, rows_ + cols_ + 1, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < rows_; ++k) work(i, k) = entry(i, basic_[k]);
      for (std::size_t j = 0; j < cols_; ++j) work(i, rows_ + j) = entry(i, nonbasic_[j]);
      work(i, rows_ + cols_) = lp_.b[i];
    }
    const std::size_t width = rows_ + cols_ + 1;
    for (std::size_t k = 0; k < rows_; ++k) {
      std::size_t best = k;
      for (std::size_t i = k + 1; i < rows_; ++i) {
        if (std::abs(work(i, k)) > std::abs(work(best, k))) best = i;
      }
      if (std::abs(work(best, k)) < 1e-13) throw std::runtime_error("simplex basis became singular");
      if (best != k) {
        for (std::size_t j = 0; j < width; ++j) std::swap(work(k, j), work(best, j));
      }
      const double inv = 1.0 / work(k, k);
      for (std::size_t j = k; j < width; ++j) work(k, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double f = work(i, k);
        if (i == k || f == 0.0) continue;
        for (std::size_t j = k; j < width; ++j) work(i, j) -= f * work(k, j);
      }
    }
    // Row k of the reduced system now solves for basic_[k].
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) a_(i, j) = work(i, rows_ + j);
      rhs_[i] = work(i, rows_ + cols_);
    }
    price();
    last_refresh_ = pivots_;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Primal simplex from a feasible dictionary using Bland's rule.
  Outcome optimize(const SimplexOptions& options) {
    for (;;) {
      if (pivots_ >= options.max_pivots) {
        throw std::runtime_error("simplex exceeded " + std::to_string(options.max_pivots) +
                                 " pivots");
      }
      if (pivots_ - last_refresh_ >= refresh_interval_) refresh();
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!enterable_[j] || cost_[j] <= options.pivot_tolerance) continue;
        if (entering == cols_ || nonbasic_[j] < nonbasic_[entering]) entering = j;
      }
      if (entering == cols_) {
        if (last_refresh_ == pivots_) return Outcome::kOptimal;
        refresh();
        continue;
      }

      // Two-pass ratio test. The first pass bounds the step so that no row
      // falls below -feasibility_tolerance; the second picks the smallest
      // basic id among rows within that step whose pivot is not tiny
      // relative to the largest available one.
      double step = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double coef = a_(i, entering);
        if (!alive_[i] || coef <= options.pivot_tolerance) continue;
        step = std::min(step, (rhs_[i] + options.feasibility_tolerance) / coef);
      }
      std::size_t leaving = rows_;
      if (step < std::numeric_limits<double>::infinity()) {
        step = std::max(step, 0.0);
        double largest = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
          const double coef = a_(i, entering);
          if (!alive_[i] || coef <= options.pivot_tolerance) continue;
          if (std::max(rhs_[i], 0.0) <= step * coef) largest = std::max(largest, coef);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
          const double coef = a_(i, entering);
          if (!alive_[i] || coef < kRelativePivot * largest) continue;
          if (std::max(rhs_[i], 0.0) > step * coef) continue;
          if (leaving == rows_ || basic_[i] < basic_[leaving]) leaving = i;
        }
      }
      if (leaving == rows_) {
        if (last_refresh_ == pivots_) return Outcome::kUnbounded;
        refresh();
        continue;
      }
      // Small pivots amplify accumulated error; confirm them on fresh data.
      if (a_(leaving, entering) < kConfirmPivot && last_refresh_ != pivots_) {
        refresh();
        continue;
      }
      pivot(leaving, entering);
    }
  }

 private:
  // Entry of the standard-form column for variable id in row i.
  double entry(std::size_t i, std::size_t id) const {
    if (id < n_) return lp_.A(i, id);
    if (id < n_ + rows_) return id - n_ == i ? 1.0 : 0.0;
    return -1.0;
  }

  void price() {
    z0_ = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = objective_[nonbasic_[j]];
    for (std::size_t i = 0; i < rows_; ++i) {
      const double ck = objective_[basic_[i]];
      if (ck == 0.0) continue;
      z0_ += ck * rhs_[i];
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= ck * a_(i, j);
    }
  }

  const LpProblem& lp_;
  std::size_t n_;
  std::size_t rows_;
  std::size_t cols_;
  Matrix a_;
  std::vector<double> rhs_;
  std::vector<double> cost_;
  double z0_ = 0.0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> alive_;
  std::vector<bool> enterable_;
  std::vector<double> objective_;
  std::size_t refresh_interval_;
  std::size_t pivots_ = 0;
  std::size_t last_refresh_ = 0;
};

void validate(const LpProblem& lp) {
  if (lp.A.rows() != lp.b.size()) {
    throw DomainError("LP has " + std::to_string(lp.A.rows()) + " rows but " +
                      std::to_string(lp.b.size()) + " right-hand sides");
  }
  if (lp.A.rows() > 0 && lp.A.cols() != lp.c.size()) {
    throw DomainError("LP has " + std::to_string(lp.A.cols()) + " columns but " +
                      std::to_string(lp.c.size()) + " objective coefficients");
  }
  for (double v : lp.A.data()) {
    if (!std::isfinite(v)) throw DomainError("LP constraint matrix has a non-finite entry");
  }
  for (double v : lp.b) {
    if (!std::isfinite(v)) throw DomainError("LP right-hand side has a non-finite entry");
  }
  for (double v : lp.c) {
    if (!std::isfinite(v)) throw DomainError("LP objective has a non-finite entry");
  }
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LpSolution solve(const LpProblem& lp, const SimplexOptions& options) {
  validate(lp);
  const std::size_t n = lp.c.size();
  const std::size_t r = lp.b.size();

  std::size_t most_negative = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (lp.b[i] < 0.0 && (most_negative == r || lp.b[i] < lp.b[most_negative])) most_negative = i;
  }
  const bool phase_one = most_negative != r;
  Dictionary dict(lp, phase_one);
  LpSolution solution;

  if (phase_one) {
    // Maximize -x0 where x0 relaxes every row; one pivot makes it feasible.
    const std::size_t aux_col = n;
    std::vector<double> cost(n + r + 1, 0.0);
    cost[n + r] = -1.0;
    dict.set_objective(std::move(cost));
    dict.pivot(most_negative, aux_col);
    dict.optimize(options);
    if (dict.z0() < -options.feasibility_tolerance) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = dict.pivots();
      return solution;
    }
    const std::size_t aux_id = n + r;
    for (std::size_t i = 0; i < dict.rows(); ++i) {
      if (dict.basic(i) != aux_id) continue;
      std::size_t best_col = dict.cols();
      double best_mag = options.pivot_tolerance;
      for (std::size_t j = 0; j < dict.cols(); ++j) {
        const double mag = std::abs(dict.coefficient(i, j));
        if (mag > best_mag) {
          best_mag = mag;
          best_col = j;
        }
      }
      if (best_col == dict.cols()) {
        dict.kill_row(i);
      } else {
        dict.pivot(i, best_col);
      }
    }
    for (std::size_t j = 0; j < dict.cols(); ++j) {
      if (dict.nonbasic(j) == aux_id) dict.forbid_column(j);
    }
  }

  std::vector<double> cost(n + r + 1, 0.0);
  std::copy(lp.c.begin(), lp.c.end(), cost.begin());
  dict.set_objective(std::move(cost));

  const auto outcome = dict.optimize(options);
  solution.pivots = dict.pivots();
  if (outcome == Dictionary::Outcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, 0.0);
  for (std::size_t i = 0; i < dict.rows(); ++i) {
    if (dict.alive(i) && dict.basic(i) < n) solution.x[dict.basic(i)] = dict.rhs(i);
  }
  solution.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) solution.objective += lp.c[j] * solution.x[j];
  for (std::size_t i = 0; i < r; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.A(i, j) * solution.x[j];
    if (lp.b[i] - lhs <= options.feasibility_tolerance) solution.tight.push_back(i);
  }
  return solution;
}

}  // namespace distortion
