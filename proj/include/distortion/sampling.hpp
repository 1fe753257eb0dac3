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

#ifndef DISTORTION_SAMPLING_HPP_
#define DISTORTION_SAMPLING_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/metric.hpp"

namespace distortion {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

// DISTORTION_SEED if set to an unsigned integer, else kDefaultSeed.
std::uint64_t seed_from_env();

// Uniform point of the probability simplex (flat Dirichlet).
std::vector<double> random_simplex_point(Rng& rng, std::size_t n);

// Between 1 and max_types distinct uniformly random rankings (capped at m!)
// with flat-Dirichlet weights.
Election random_election(Rng& rng, int m, std::size_t max_types);

struct EuclideanInstance {
  std::vector<std::array<double, 2>> candidates;
  std::vector<std::array<double, 2>> voters;
  Election election;
  // Distances from each candidate to the first voter of each ranking type.
  MetricSpace metric;
};

// Candidates and voters uniform in the unit square, every voter with equal
// weight; rankings sort by Euclidean distance with ties broken by id.
EuclideanInstance random_euclidean_instance(Rng& rng, int m, std::size_t voters);

}  // namespace distortion

#endif  // DISTORTION_SAMPLING_HPP_
