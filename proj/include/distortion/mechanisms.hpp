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

#ifndef DISTORTION_MECHANISMS_HPP_
#define DISTORTION_MECHANISMS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/metric.hpp"

namespace distortion {

// How the LP optimum beta translates into a distortion bound.
enum class Convention {
  kOnePlusInverse,       // 1 + 1/beta, constraints carry full SC differences
  kOnePlusTwiceInverse,  // 1 + 2/beta, constraints halved
  kPluralityNorm,        // 3 - 2|plu|^2
  kConstantThree,
};

// The class of metrics the guarantee is proven for.
enum class Scope {
  kListedMetrics,
  kZeroOneTwoThreeMetrics,  // all metrics only conjecturally
  kAllMetrics,
};

const char* to_string(Convention convention);
const char* to_string(Scope scope);

struct MechanismResult {
  std::string mechanism;
  Lottery lottery;
  // LP optimum (or the SmartDictatorship weight sum); +inf when unbounded.
  std::optional<double> beta;
  double guarantee = 0.0;
  Convention convention = Convention::kOnePlusInverse;
  Scope scope = Scope::kListedMetrics;
  std::vector<std::size_t> tight_constraints;
};

// Every metric must be defined over `election` and pass validate_metric.
MechanismResult lp_a_lottery(const Election& election, std::span<const MetricSpace> metrics);

MechanismResult lp_b_lottery(const Election& election);

inline constexpr int kLpCMaxCandidates = 20;

// Constraints are ordered by coalition bitmask (bit i-1 for candidate i).
MechanismResult lp_c_lottery(const Election& election);

MechanismResult smart_dictatorship(const Election& election);

MechanismResult random_dictatorship(const Election& election);

}  // namespace distortion

#endif  // DISTORTION_MECHANISMS_HPP_
