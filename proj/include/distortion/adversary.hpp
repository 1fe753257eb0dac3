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

#ifndef DISTORTION_ADVERSARY_HPP_
#define DISTORTION_ADVERSARY_HPP_

#include <optional>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/mechanisms.hpp"
#include "distortion/metric.hpp"

namespace distortion {

struct AdversaryResult {
  double distortion = 0.0;  // +inf when some reference LP is unbounded
  std::optional<MetricSpace> witness;
  int reference = 0;  // candidate whose social cost is normalized to 1
};

// Exact worst case of E[SC(lottery)] / min SC over every metric consistent
// with the election, one LP per choice of the optimal candidate.
AdversaryResult worst_case_distortion(const Election& election, const Lottery& lottery);

// Instance-optimal lottery for three candidates from the six generalized
// (0,1,2,3)-metric constraints; guarantee is 1 + 1/beta. Also accepts m = 2.
MechanismResult optimal_lottery_m3(const Election& election);

struct DominanceReport {
  int optimum = 0;  // i*, lowest-id minimizer of SC under the input metric
  MetricSpace biased;
  std::vector<double> original_costs;
  std::vector<double> biased_costs;
  // SC(i*, d) - SC(i*, d^); must be >= -tolerance.
  double optimum_slack = 0.0;
  // min over i of [SC(i,d^) - SC(i*,d^)] - [SC(i,d) - SC(i*,d)].
  double gap_slack = 0.0;
  bool holds = false;
};

// Throws DomainError if the metric fails validate_metric.
DominanceReport check_biased_dominance(const MetricSpace& metric,
                                       double tolerance = kMetricTolerance);

}  // namespace distortion

#endif  // DISTORTION_ADVERSARY_HPP_
