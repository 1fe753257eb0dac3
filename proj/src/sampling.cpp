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

#include "distortion/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string_view>

namespace distortion {

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("DISTORTION_SEED");
  if (raw == nullptr) return kDefaultSeed;
  const std::string_view text(raw);
  std::uint64_t seed = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size()) return kDefaultSeed;
  return seed;
}

std::vector<double> random_simplex_point(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = exp(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

Election random_election(Rng& rng, int m, std::size_t max_types) {
  std::size_t permutations = 1;
  for (int i = 2; i <= m && permutations < max_types; ++i) permutations *= static_cast<std::size_t>(i);
  const std::size_t cap = std::max<std::size_t>(1, std::min(max_types, permutations));
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, cap)(rng);

  std::set<std::vector<int>> rankings;
  std::vector<int> ranking(static_cast<std::size_t>(m));
  std::iota(ranking.begin(), ranking.end(), 1);
  while (rankings.size() < count) {
    std::shuffle(ranking.begin(), ranking.end(), rng);
    rankings.insert(ranking);
  }
  const std::vector<double> weights = random_simplex_point(rng, count);
  std::vector<RankingType> profile;
  std::size_t t = 0;
  for (const auto& r : rankings) profile.push_back({r, weights[t++]});
  // Keep the generation order independent of lexicographic set order.
  std::shuffle(profile.begin(), profile.end(), rng);
  return Election::create(m, std::move(profile));
}

EuclideanInstance random_euclidean_instance(Rng& rng, int m, std::size_t voters) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto point = [&] { return std::array<double, 2>{unit(rng), unit(rng)}; };
  std::vector<std::array<double, 2>> candidates(static_cast<std::size_t>(m));
  for (auto& c : candidates) c = point();
  std::vector<std::array<double, 2>> voter_points(voters);
  for (auto& v : voter_points) v = point();

  auto dist = [](const std::array<double, 2>& p, const std::array<double, 2>& q) {
    return std::hypot(p[0] - q[0], p[1] - q[1]);
  };

  // ranking -> (type index, weight); first voter of a type fixes its row.
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<RankingType> profile;
  std::vector<std::size_t> representative;
  for (std::size_t v = 0; v < voters; ++v) {
    std::vector<int> ranking(static_cast<std::size_t>(m));
    std::iota(ranking.begin(), ranking.end(), 1);
    std::stable_sort(ranking.begin(), ranking.end(), [&](int i, int j) {
      return dist(candidates[static_cast<std::size_t>(i - 1)], voter_points[v]) <
             dist(candidates[static_cast<std::size_t>(j - 1)], voter_points[v]);
    });
    const auto [it, inserted] = slot.emplace(ranking, profile.size());
    if (inserted) {
      profile.push_back({ranking, 0.0});
      representative.push_back(v);
    }
    profile[it->second].weight += 1.0 / static_cast<double>(voters);
  }

  Election election = Election::create(m, profile);
  Matrix d(static_cast<std::size_t>(m), profile.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t t = 0; t < profile.size(); ++t) {
      d(i, t) = dist(candidates[i], voter_points[representative[t]]);
    }
  }
  MetricSpace metric(election, std::move(d));
  return {std::move(candidates), std::move(voter_points), std::move(election), std::move(metric)};
}

}  // namespace distortion
