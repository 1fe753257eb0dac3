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

#ifndef DISTORTION_METRIC_HPP_
#define DISTORTION_METRIC_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/matrix.hpp"

namespace distortion {

// Probability distribution over candidates; slot c - 1 holds candidate c.
class Lottery {
 public:
  // Accepts nonnegative finite entries whose sum is within `slack` of one
  // and renormalizes them. Throws DomainError otherwise.
  static Lottery from_probabilities(std::vector<double> p, double slack = 1e-6);
  static Lottery uniform(int m);
  static Lottery point_mass(int m, int candidate);

  int candidates() const { return static_cast<int>(p_.size()); }
  double probability(int candidate) const { return p_[static_cast<std::size_t>(candidate - 1)]; }
  std::span<const double> probabilities() const { return p_; }

 private:
  explicit Lottery(std::vector<double> p) : p_(std::move(p)) {}
  std::vector<double> p_;
};

// Candidate-to-type distances of a metric consistent with an election.
// Rows are candidates (row c - 1 for candidate c), columns are ranking types.
// Candidate-candidate and type-type distances are implied by the graph
// distance closure of these edges.
class MetricSpace {
 public:
  // Only checks dimensions; use validate_metric for metric properties.
  MetricSpace(Election election, Matrix distances);

  const Election& election() const { return election_; }
  const Matrix& distances() const { return distances_; }
  int candidates() const { return election_.candidates(); }
  std::size_t types() const { return election_.type_count(); }
  double operator()(int candidate, std::size_t type) const {
    return distances_(static_cast<std::size_t>(candidate - 1), type);
  }

 private:
  Election election_;
  Matrix distances_;
};

// (0,1,2,3)-metric biased toward candidate i.
MetricSpace build_0123(const Election& election, int candidate);

// (1,3)-metric biased toward candidate i. Throws DomainError if some other
// candidate is ranked below i by every type.
MetricSpace build_13(const Election& election, int candidate);

// Biased metric for a nonnegative candidate vector x (slot c - 1) with at
// least one zero entry. Throws DomainError otherwise.
MetricSpace build_biased(const Election& election, std::span<const double> x);

// Generalized (0,1,2,3)-metric for a nonempty proper coalition.
MetricSpace build_generalized_0123(const Election& election, const CandidateSet& coalition);

struct MetricViolation {
  enum class Kind { kDimension, kNonFinite, kNegative, kOrdinal, kClosure };
  Kind kind;
  int candidate = 0;          // candidate whose edge is violated
  int other = 0;              // kOrdinal: candidate ranked below `candidate`
  std::size_t type = 0;
  double edge = 0.0;          // offending distance
  double bound = 0.0;         // value it should not exceed (or fall below)
  std::vector<std::string> witness;  // kClosure: node path shorter than the edge
  std::string message;
};

struct ValidationReport {
  std::vector<MetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline constexpr double kMetricTolerance = 1e-9;

// Checks nonnegativity, ordinal consistency, and that every candidate-type
// edge equals its shortest-path distance in the bipartite graph.
ValidationReport validate_metric(const MetricSpace& metric, double tolerance = kMetricTolerance);

// m x m shortest-path distances between candidates through voter types.
Matrix candidate_closure(const MetricSpace& metric);

// Replaces every edge by its shortest-path distance.
MetricSpace close_metric(const MetricSpace& metric);

double social_cost(const MetricSpace& metric, int candidate);
std::vector<double> social_costs(const MetricSpace& metric);

// Expected social cost of the lottery over the optimal social cost. Returns
// +inf when the optimum is zero and the expectation positive, 1 when both are.
double distortion(const MetricSpace& metric, const Lottery& lottery);

}  // namespace distortion

#endif  // DISTORTION_METRIC_HPP_
