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

#include "distortion/election.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "distortion/errors.hpp"

namespace distortion {
namespace {

constexpr double kWeightSumSlack = 1e-6;

std::string describe(const std::vector<int>& ranking) {
  std::string out = "(";
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    if (p > 0) out += ",";
    out += std::to_string(ranking[p]);
  }
  return out + ")";
}

void require_coalition(const Election& election, const CandidateSet& coalition) {
  const int m = election.candidates();
  if (m > CandidateSet::kMaxCandidates) {
    throw DomainError("coalitions are limited to 64 candidates");
  }
  if (coalition.empty()) throw DomainError("coalition must be nonempty");
  if ((coalition.mask() & ~CandidateSet::all(m).mask()) != 0) {
    throw DomainError("coalition names a candidate outside 1..m");
  }
  if (coalition.size() == m) throw DomainError("coalition must be a proper subset");
}

}  // namespace

CandidateSet::CandidateSet(std::initializer_list<int> members) {
  for (int c : members) insert(c);
}

CandidateSet CandidateSet::all(int m) {
  if (m < 0 || m > kMaxCandidates) throw DomainError("candidate count outside 0..64");
  return CandidateSet(m == kMaxCandidates ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

void CandidateSet::insert(int candidate) {
  if (candidate < 1 || candidate > kMaxCandidates) {
    throw DomainError("candidate id " + std::to_string(candidate) + " outside 1..64");
  }
  mask_ |= std::uint64_t{1} << (candidate - 1);
}

int CandidateSet::size() const { return std::popcount(mask_); }

std::vector<int> CandidateSet::members() const {
  std::vector<int> out;
  for (int c = 1; c <= kMaxCandidates; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

CandidateSet CandidateSet::complement(int m) const {
  return CandidateSet(all(m).mask() & ~mask_);
}

Election::Election(int m, std::vector<RankingType> profile)
    : m_(m), profile_(std::move(profile)) {
  positions_.assign(profile_.size() * static_cast<std::size_t>(m_), 0);
  for (std::size_t t = 0; t < profile_.size(); ++t) {
    const auto& ranking = profile_[t].ranking;
    for (int p = 0; p < m_; ++p) {
      positions_[t * static_cast<std::size_t>(m_) + static_cast<std::size_t>(ranking[p] - 1)] = p;
    }
  }
}

Election Election::create(int candidates, std::vector<RankingType> profile) {
  if (candidates < 2) throw DomainError("an election needs at least 2 candidates");
  if (profile.empty()) throw DomainError("profile is empty");

  std::set<std::vector<int>> seen;
  double total = 0.0;
  for (const auto& type : profile) {
    if (static_cast<int>(type.ranking.size()) != candidates) {
      throw DomainError("ranking " + describe(type.ranking) + " is not a permutation of 1.." +
                        std::to_string(candidates));
    }
    std::vector<bool> present(static_cast<std::size_t>(candidates) + 1, false);
    for (int c : type.ranking) {
      if (c < 1 || c > candidates || present[static_cast<std::size_t>(c)]) {
        throw DomainError("ranking " + describe(type.ranking) + " is not a permutation of 1.." +
                          std::to_string(candidates));
      }
      present[static_cast<std::size_t>(c)] = true;
    }
    if (!seen.insert(type.ranking).second) {
      throw DomainError("duplicate ranking " + describe(type.ranking));
    }
    if (!std::isfinite(type.weight) || type.weight < 0.0) {
      throw DomainError("ranking " + describe(type.ranking) + " has a negative or non-finite weight");
    }
    total += type.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumSlack) {
    throw DomainError("weights sum to " + std::to_string(total) + ", expected 1");
  }
  for (auto& type : profile) type.weight /= total;
  return Election(candidates, std::move(profile));
}

Election Election::without_candidate(int candidate) const {
  if (candidate < 1 || candidate > m_) throw DomainError("candidate outside 1..m");
  if (m_ <= 2) throw DomainError("cannot reduce an election below 2 candidates");
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<RankingType> profile;
  for (const auto& type : profile_) {
    std::vector<int> ranking;
    ranking.reserve(static_cast<std::size_t>(m_ - 1));
    for (int c : type.ranking) {
      if (c != candidate) ranking.push_back(c > candidate ? c - 1 : c);
    }
    auto [it, inserted] = slot.try_emplace(ranking, profile.size());
    if (inserted) {
      profile.push_back({std::move(ranking), type.weight});
    } else {
      profile[it->second].weight += type.weight;
    }
  }
  return Election(m_ - 1, std::move(profile));
}

Matrix comparisons_matrix(const Election& election) {
  const int m = election.candidates();
  Matrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    const auto& ranking = election.type(t).ranking;
    const double w = election.weight(t);
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        out(static_cast<std::size_t>(ranking[p] - 1), static_cast<std::size_t>(ranking[q] - 1)) += w;
      }
    }
  }
  return out;
}

std::vector<double> plurality_vector(const Election& election) {
  std::vector<double> out(static_cast<std::size_t>(election.candidates()), 0.0);
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    out[static_cast<std::size_t>(election.top(t) - 1)] += election.weight(t);
  }
  return out;
}

double share_above(const Election& election, const CandidateSet& above,
                   const CandidateSet& below) {
  if (above.empty() || below.empty()) throw DomainError("share_above needs nonempty sets");
  if ((above.mask() & below.mask()) != 0) throw DomainError("share_above needs disjoint sets");
  const auto upper = above.members();
  const auto lower = below.members();
  for (int c : upper) {
    if (c > election.candidates()) throw DomainError("candidate outside 1..m");
  }
  for (int c : lower) {
    if (c > election.candidates()) throw DomainError("candidate outside 1..m");
  }
  double share = 0.0;
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    int worst_upper = -1;
    for (int c : upper) worst_upper = std::max(worst_upper, election.position(t, c));
    int best_lower = election.candidates();
    for (int c : lower) best_lower = std::min(best_lower, election.position(t, c));
    if (worst_upper < best_lower) share += election.weight(t);
  }
  return share;
}

CoalitionStats coalition_stats(const Election& election, const CandidateSet& coalition) {
  require_coalition(election, coalition);
  const int m = election.candidates();
  const auto members = coalition.members();
  const int size = coalition.size();
  CoalitionStats stats;
  stats.s_over.assign(static_cast<std::size_t>(m), 0.0);
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    int worst = -1;
    for (int c : members) worst = std::max(worst, election.position(t, c));
    const double w = election.weight(t);
    if (worst == size - 1) stats.plu += w;
    for (int j = 1; j <= m; ++j) {
      if (!coalition.contains(j) && election.position(t, j) > worst) {
        stats.s_over[static_cast<std::size_t>(j - 1)] += w;
      }
    }
  }
  return stats;
}

}  // namespace distortion
