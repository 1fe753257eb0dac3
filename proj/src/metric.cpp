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

#include "distortion/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "distortion/errors.hpp"

namespace distortion {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t slot(int candidate) { return static_cast<std::size_t>(candidate - 1); }

void require_candidate(const Election& election, int candidate) {
  if (candidate < 1 || candidate > election.candidates()) {
    throw DomainError("candidate " + std::to_string(candidate) + " outside 1.." +
                      std::to_string(election.candidates()));
  }
}

std::string candidate_label(int c) { return "c" + std::to_string(c); }

std::string type_label(const Election& election, std::size_t t) {
  std::string out = "t" + std::to_string(t) + "(";
  const auto& ranking = election.type(t).ranking;
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    if (p > 0) out += ",";
    out += std::to_string(ranking[p]);
  }
  return out + ")";
}

// Candidate-to-candidate shortest paths through types. via(i, j) is the type
// realizing the two-edge hop i - t - j; next(i, j) is the first candidate
// after i on a shortest candidate path to j.
struct CandidateGraph {
  Matrix dist;
  std::vector<std::size_t> via;
  std::vector<int> next;
  int m = 0;

  std::size_t at(int i, int j) const { return slot(i) * static_cast<std::size_t>(m) + slot(j); }
};

CandidateGraph shortest_candidate_paths(const MetricSpace& metric) {
  const int m = metric.candidates();
  const std::size_t types = metric.types();
  CandidateGraph g;
  g.m = m;
  g.dist = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m), kInf);
  g.via.assign(static_cast<std::size_t>(m * m), 0);
  g.next.assign(static_cast<std::size_t>(m * m), 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      g.next[g.at(i, j)] = j;
      if (i == j) {
        g.dist(slot(i), slot(j)) = 0.0;
        continue;
      }
      for (std::size_t t = 0; t < types; ++t) {
        const double hop = metric(i, t) + metric(j, t);
        if (hop < g.dist(slot(i), slot(j))) {
          g.dist(slot(i), slot(j)) = hop;
          g.via[g.at(i, j)] = t;
        }
      }
    }
  }
  for (int k = 1; k <= m; ++k) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        const double through = g.dist(slot(i), slot(k)) + g.dist(slot(k), slot(j));
        if (through < g.dist(slot(i), slot(j))) {
          g.dist(slot(i), slot(j)) = through;
          g.next[g.at(i, j)] = g.next[g.at(i, k)];
        }
      }
    }
  }
  return g;
}

std::vector<std::string> witness_path(const MetricSpace& metric, const CandidateGraph& g,
                                      int from, int to, std::size_t type) {
  const Election& e = metric.election();
  std::vector<std::string> path{candidate_label(from)};
  int at = from;
  while (at != to) {
    const int step = g.next[g.at(at, to)];
    path.push_back(type_label(e, g.via[g.at(at, step)]));
    path.push_back(candidate_label(step));
    at = step;
  }
  path.push_back(type_label(e, type));
  return path;
}

}  // namespace

Lottery Lottery::from_probabilities(std::vector<double> p, double slack) {
  if (p.empty()) throw DomainError("lottery is empty");
  double total = 0.0;
  for (double& v : p) {
    if (!std::isfinite(v)) throw DomainError("lottery has a non-finite entry");
    if (v < 0.0) {
      if (v < -1e-12) throw DomainError("lottery has a negative entry");
      v = 0.0;
    }
    total += v;
  }
  if (std::abs(total - 1.0) > slack) {
    throw DomainError("lottery sums to " + std::to_string(total) + ", expected 1");
  }
  for (double& v : p) v /= total;
  return Lottery(std::move(p));
}

Lottery Lottery::uniform(int m) {
  if (m < 1) throw DomainError("lottery needs at least one candidate");
  return Lottery(std::vector<double>(static_cast<std::size_t>(m), 1.0 / m));
}

Lottery Lottery::point_mass(int m, int candidate) {
  if (candidate < 1 || candidate > m) throw DomainError("candidate outside 1..m");
  std::vector<double> p(static_cast<std::size_t>(m), 0.0);
  p[slot(candidate)] = 1.0;
  return Lottery(std::move(p));
}

MetricSpace::MetricSpace(Election election, Matrix distances)
    : election_(std::move(election)), distances_(std::move(distances)) {
  if (distances_.rows() != static_cast<std::size_t>(election_.candidates()) ||
      distances_.cols() != election_.type_count()) {
    throw DomainError("distance matrix is " + std::to_string(distances_.rows()) + "x" +
                      std::to_string(distances_.cols()) + ", election needs " +
                      std::to_string(election_.candidates()) + "x" +
                      std::to_string(election_.type_count()));
  }
}

MetricSpace build_0123(const Election& election, int candidate) {
  require_candidate(election, candidate);
  const int m = election.candidates();
  Matrix d(static_cast<std::size_t>(m), election.type_count());
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    const double base = election.top(t) == candidate ? 0.0 : 1.0;
    for (int j = 1; j <= m; ++j) {
      d(slot(j), t) = base + (j == candidate || election.prefers(t, j, candidate) ? 0.0 : 2.0);
    }
  }
  return MetricSpace(election, std::move(d));
}

MetricSpace build_13(const Election& election, int candidate) {
  require_candidate(election, candidate);
  const int m = election.candidates();
  for (int j = 1; j <= m; ++j) {
    if (j == candidate) continue;
    bool beaten_somewhere = false;
    for (std::size_t t = 0; t < election.type_count() && !beaten_somewhere; ++t) {
      beaten_somewhere = election.prefers(t, j, candidate);
    }
    if (!beaten_somewhere) {
      throw DomainError("candidate " + std::to_string(j) + " is ranked below " +
                        std::to_string(candidate) + " by every voter; (1,3)-metric undefined");
    }
  }
  Matrix d(static_cast<std::size_t>(m), election.type_count());
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    for (int j = 1; j <= m; ++j) {
      d(slot(j), t) = (j == candidate || election.prefers(t, j, candidate)) ? 1.0 : 3.0;
    }
  }
  return MetricSpace(election, std::move(d));
}

MetricSpace build_biased(const Election& election, std::span<const double> x) {
  const int m = election.candidates();
  if (x.size() != static_cast<std::size_t>(m)) {
    throw DomainError("biased metric vector must have one entry per candidate");
  }
  bool has_zero = false;
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("biased metric vector must be nonnegative");
    has_zero = has_zero || v == 0.0;
  }
  if (!has_zero) throw DomainError("biased metric vector needs a zero entry");

  Matrix d(static_cast<std::size_t>(m), election.type_count());
  std::vector<double> floor_below(static_cast<std::size_t>(m));
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    const auto& ranking = election.type(t).ranking;
    // floor_below[p]: min x over the candidate at position p and everyone below.
    double running = kInf;
    double half_gap = 0.0;
    for (int p = m - 1; p >= 0; --p) {
      const double xp = x[slot(ranking[p])];
      running = std::min(running, xp);
      floor_below[static_cast<std::size_t>(p)] = running;
      half_gap = std::max(half_gap, xp - running);
    }
    const double y = 0.5 * half_gap;
    for (int p = 0; p < m; ++p) d(slot(ranking[p]), t) = y + floor_below[static_cast<std::size_t>(p)];
  }
  return MetricSpace(election, std::move(d));
}

MetricSpace build_generalized_0123(const Election& election, const CandidateSet& coalition) {
  coalition_stats(election, coalition);  // rejects empty or full coalitions
  const int m = election.candidates();
  const int size = coalition.size();
  const auto members = coalition.members();
  Matrix d(static_cast<std::size_t>(m), election.type_count());
  for (std::size_t t = 0; t < election.type_count(); ++t) {
    int worst = -1;
    for (int c : members) worst = std::max(worst, election.position(t, c));
    const double base = worst == size - 1 ? 0.0 : 1.0;
    for (int j = 1; j <= m; ++j) {
      const bool below_all = !coalition.contains(j) && election.position(t, j) > worst;
      d(slot(j), t) = base + (below_all ? 2.0 : 0.0);
    }
  }
  return MetricSpace(election, std::move(d));
}

ValidationReport validate_metric(const MetricSpace& metric, double tolerance) {
  ValidationReport report;
  const Election& e = metric.election();
  const int m = metric.candidates();
  const std::size_t types = metric.types();

  for (int i = 1; i <= m; ++i) {
    for (std::size_t t = 0; t < types; ++t) {
      const double v = metric(i, t);
      if (!std::isfinite(v)) {
        report.violations.push_back({MetricViolation::Kind::kNonFinite, i, 0, t, v, 0.0, {},
                                     "d(" + candidate_label(i) + "," + type_label(e, t) +
                                         ") is not finite"});
      } else if (v < 0.0) {
        report.violations.push_back({MetricViolation::Kind::kNegative, i, 0, t, v, 0.0, {},
                                     "d(" + candidate_label(i) + "," + type_label(e, t) +
                                         ") is negative"});
      }
    }
  }
  if (!report.ok()) return report;

  for (std::size_t t = 0; t < types; ++t) {
    const auto& ranking = e.type(t).ranking;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const int i = ranking[p];
        const int j = ranking[q];
        if (metric(i, t) > metric(j, t) + tolerance) {
          report.violations.push_back(
              {MetricViolation::Kind::kOrdinal, i, j, t, metric(i, t), metric(j, t), {},
               type_label(e, t) + " ranks " + std::to_string(i) + " above " + std::to_string(j) +
                   " but d(" + candidate_label(i) + ")=" + std::to_string(metric(i, t)) +
                   " > d(" + candidate_label(j) + ")=" + std::to_string(metric(j, t))});
        }
      }
    }
  }

  const CandidateGraph g = shortest_candidate_paths(metric);
  for (int j = 1; j <= m; ++j) {
    for (std::size_t v = 0; v < types; ++v) {
      double best = kInf;
      int through = 0;
      for (int i = 1; i <= m; ++i) {
        if (i == j) continue;
        const double length = g.dist(slot(j), slot(i)) + metric(i, v);
        if (length < best) {
          best = length;
          through = i;
        }
      }
      if (best < metric(j, v) - tolerance) {
        report.violations.push_back(
            {MetricViolation::Kind::kClosure, j, through, v, metric(j, v), best,
             witness_path(metric, g, j, through, v),
             "edge " + candidate_label(j) + "-" + type_label(e, v) + " of length " +
                 std::to_string(metric(j, v)) + " is longer than a path of length " +
                 std::to_string(best)});
      }
    }
  }
  return report;
}

Matrix candidate_closure(const MetricSpace& metric) {
  return shortest_candidate_paths(metric).dist;
}

MetricSpace close_metric(const MetricSpace& metric) {
  const CandidateGraph g = shortest_candidate_paths(metric);
  const int m = metric.candidates();
  Matrix d = metric.distances();
  for (int j = 1; j <= m; ++j) {
    for (std::size_t v = 0; v < metric.types(); ++v) {
      for (int i = 1; i <= m; ++i) {
        if (i != j) d(slot(j), v) = std::min(d(slot(j), v), g.dist(slot(j), slot(i)) + metric(i, v));
      }
    }
  }
  return MetricSpace(metric.election(), std::move(d));
}

double social_cost(const MetricSpace& metric, int candidate) {
  require_candidate(metric.election(), candidate);
  double total = 0.0;
  for (std::size_t t = 0; t < metric.types(); ++t) {
    total += metric.election().weight(t) * metric(candidate, t);
  }
  return total;
}

std::vector<double> social_costs(const MetricSpace& metric) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(metric.candidates()));
  for (int c = 1; c <= metric.candidates(); ++c) out.push_back(social_cost(metric, c));
  return out;
}

double distortion(const MetricSpace& metric, const Lottery& lottery) {
  if (lottery.candidates() != metric.candidates()) {
    throw DomainError("lottery and metric disagree on the number of candidates");
  }
  const auto costs = social_costs(metric);
  const double best = *std::min_element(costs.begin(), costs.end());
  double expected = 0.0;
  for (int c = 1; c <= metric.candidates(); ++c) {
    expected += lottery.probability(c) * costs[slot(c)];
  }
  if (best == 0.0) return expected > 0.0 ? kInf : 1.0;
  return expected / best;
}

}  // namespace distortion
