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

#ifndef DISTORTION_ELECTION_HPP_
#define DISTORTION_ELECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "distortion/matrix.hpp"

namespace distortion {

// Candidate ids are 1-based throughout the public API. Vectors indexed by
// candidate (plurality vector, lotteries, social costs) use slot c - 1.

// A strict ranking shared by a fraction of the electorate.
struct RankingType {
  std::vector<int> ranking;  // most preferred first
  double weight = 0.0;
};

// Subset of candidates 1..64 stored as a bitmask (bit c - 1 for candidate c).
class CandidateSet {
 public:
  static constexpr int kMaxCandidates = 64;

  CandidateSet() = default;
  CandidateSet(std::initializer_list<int> members);
  static CandidateSet from_mask(std::uint64_t mask) { return CandidateSet(mask); }
  static CandidateSet all(int m);

  bool contains(int candidate) const {
    return candidate >= 1 && candidate <= kMaxCandidates &&
           ((mask_ >> (candidate - 1)) & 1u) != 0;
  }
  void insert(int candidate);
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }
  std::vector<int> members() const;
  CandidateSet complement(int m) const;

  bool operator==(const CandidateSet&) const = default;

 private:
  explicit CandidateSet(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

// Weighted profile of distinct strict rankings over candidates 1..m with
// weights summing to one. Immutable after construction.
class Election {
 public:
  // Validates the profile. Weights whose sum is within 1e-6 of one are
  // renormalized; anything further off is rejected. Throws DomainError.
  static Election create(int candidates, std::vector<RankingType> profile);

  int candidates() const { return m_; }
  std::size_t type_count() const { return profile_.size(); }
  std::span<const RankingType> profile() const { return profile_; }
  const RankingType& type(std::size_t t) const { return profile_[t]; }
  double weight(std::size_t t) const { return profile_[t].weight; }
  int top(std::size_t t) const { return profile_[t].ranking.front(); }

  // 0-based position of candidate in type t's ranking.
  int position(std::size_t t, int candidate) const {
    return positions_[t * static_cast<std::size_t>(m_) + static_cast<std::size_t>(candidate - 1)];
  }
  // True if type t ranks i strictly above j.
  bool prefers(std::size_t t, int i, int j) const { return position(t, i) < position(t, j); }

  // Election over the remaining candidates after erasing one from every
  // ranking; survivors are relabeled 1..m-1 in increasing id order and
  // rankings that become identical are merged.
  Election without_candidate(int candidate) const;

 private:
  Election(int m, std::vector<RankingType> profile);

  int m_ = 0;
  std::vector<RankingType> profile_;
  std::vector<int> positions_;
};

// Entry (i-1, j-1) is the fraction of voters ranking i above j; zero diagonal.
Matrix comparisons_matrix(const Election& election);

// Entry c-1 is the fraction of voters ranking c first.
std::vector<double> plurality_vector(const Election& election);

// Fraction of voters ranking every member of `above` over every member of
// `below`. Both sets must be nonempty and disjoint.
double share_above(const Election& election, const CandidateSet& above,
                   const CandidateSet& below);

struct CoalitionStats {
  // s_over[j-1] = s_{I > j} for j outside I; entries for members are 0.
  std::vector<double> s_over;
  // Fraction of voters whose top |I| positions are exactly I.
  double plu = 0.0;
};

// Throws DomainError unless I is a nonempty proper subset of 1..m.
CoalitionStats coalition_stats(const Election& election, const CandidateSet& coalition);

}  // namespace distortion

#endif  // DISTORTION_ELECTION_HPP_
