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

#include "distortion/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "distortion/errors.hpp"
#include "distortion/serialize.hpp"
#include "nelder_mead.hpp"

namespace distortion {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string common_violation(double a, double b) {
  const double eps = kAdmissibilityMargin;
  if (!(a > eps && a < 1.0 - eps)) return "a must lie in (0, 1)";
  if (!(b > eps && b < 0.5 - eps)) return "b must lie in (0, 1/2)";
  if (a + b > 1.0 + 1e-12) return "a + b must not exceed 1";
  return {};
}

std::string c_violation(double a, double b, double c) {
  const double eps = kAdmissibilityMargin;
  if (!(c > eps && c < 0.5 - eps)) return "c must lie in (0, 1/2)";
  if (a + b + c < 1.0 - 1e-12) return "a + b + c must be at least 1";
  if (!(1.0 - 2.0 * c * (1.0 - c) > b * (1.0 - b) / (1.0 - a) + eps)) {
    return "1 - 2c(1-c) must exceed b(1-b)/(1-a)";
  }
  return {};
}

}  // namespace

std::string admissibility_violation(const LowerBoundParams& params) {
  if (params.k < 0) return "k must be nonnegative";
  std::string reason = common_violation(params.a, params.b);
  if (!reason.empty()) return reason;
  if (params.k == 0) {
    if (!(1.0 > params.b * (1.0 - params.b) / (1.0 - params.a) + kAdmissibilityMargin)) {
      return "b(1-b)/(1-a) must be below 1";
    }
    return {};
  }
  if (!params.c) return "c is required when m >= 4";
  return c_violation(params.a, params.b, *params.c);
}

std::string admissibility_violation_limit(double a, double b, double c) {
  std::string reason = common_violation(a, b);
  return reason.empty() ? c_violation(a, b, c) : reason;
}

void require_admissible(const LowerBoundParams& params) {
  const std::string reason = admissibility_violation(params);
  if (!reason.empty()) throw DomainError("admissibility violated: " + reason);
}

Matrix lower_bound_comparisons(const LowerBoundParams& params) {
  const auto m = static_cast<std::size_t>(params.k + 3);
  const double a = params.a;
  const double b = params.b;
  const double c = params.c.value_or(0.0);
  Matrix M(m, m, 0.0);
  for (std::size_t j = 1; j < m; ++j) {
    M(0, j) = a;
    M(j, 0) = 1.0 - a;
  }
  for (std::size_t j = 2; j < m; ++j) {
    M(1, j) = b;
    M(j, 1) = 1.0 - b;
  }
  for (std::size_t j = 3; j < m; ++j) {
    M(2, j) = c;
    M(j, 2) = 1.0 - c;
  }
  for (std::size_t i = 3; i < m; ++i) {
    for (std::size_t j = 3; j < m; ++j) M(i, j) = i == j ? 0.0 : 0.5;
  }
  return M;
}

std::vector<double> lower_bound_plurality(const LowerBoundParams& params) {
  std::vector<double> plu(static_cast<std::size_t>(params.k + 3), 0.0);
  plu[0] = params.a;
  plu[1] = params.b;
  plu[2] = 1.0 - params.a - params.b;
  return plu;
}

Election build_lower_bound_election(int m, const LowerBoundParams& params) {
  if (m < 3 || m > kMaxExplicitCandidates) {
    throw DomainError("explicit lower-bound elections need 3 <= m <= " +
                      std::to_string(kMaxExplicitCandidates) + ", got " + std::to_string(m));
  }
  if (params.k != m - 3) {
    throw DomainError("k must equal m - 3 (m = " + std::to_string(m) + ", k = " +
                      std::to_string(params.k) + ")");
  }
  require_admissible(params);
  const double a = params.a;
  const double b = params.b;
  std::vector<RankingType> profile;
  auto add = [&profile](std::vector<int> ranking, double weight) {
    if (weight > 0.0) profile.push_back({std::move(ranking), weight});
  };

  if (m == 3) {
    add({1, 3, 2}, a);
    add({2, 3, 1}, b);
    add({3, 2, 1}, 1.0 - a - b);
    return Election::create(3, std::move(profile));
  }

  // Candidates 4..m form a block that sits either just before or just
  // after 3, each internal order in equal proportion.
  const double c = *params.c;
  const double before = (1.0 - c) / (a + b);
  std::vector<int> block(static_cast<std::size_t>(m - 3));
  std::iota(block.begin(), block.end(), 4);
  std::vector<std::vector<int>> orders;
  do {
    orders.push_back(block);
  } while (std::next_permutation(block.begin(), block.end()));
  const double share = 1.0 / static_cast<double>(orders.size());

  auto ranking = [](int first, const std::vector<int>& head, const std::vector<int>& tail,
                    std::vector<int> rest) {
    std::vector<int> r{first};
    r.insert(r.end(), head.begin(), head.end());
    r.insert(r.end(), tail.begin(), tail.end());
    r.insert(r.end(), rest.begin(), rest.end());
    return r;
  };
  for (const auto& order : orders) {
    add(ranking(1, order, {3}, {2}), a * before * share);
    add(ranking(1, {3}, order, {2}), a * (1.0 - before) * share);
    add(ranking(2, order, {3}, {1}), b * before * share);
    add(ranking(2, {3}, order, {1}), b * (1.0 - before) * share);
    add(ranking(3, order, {}, {2, 1}), (1.0 - a - b) * share);
  }
  return Election::create(m, std::move(profile));
}

std::vector<double> m_inverse_column_sums(const LowerBoundParams& params) {
  require_admissible(params);
  const double a = params.a;
  const double b = params.b;
  const double c = params.k == 0 ? 0.0 : *params.c;
  const double k = params.k;
  const double D = (k + 1.0) - 2.0 * k * c * (1.0 - c);
  std::vector<double> sums(static_cast<std::size_t>(params.k + 3), 2.0 * b * c / (1.0 - a) / D);
  sums[0] = (-(k + 1.0) * b * (1.0 - b) / (a * (1.0 - a)) + D / a) / D;
  sums[1] = ((k + 1.0) * (1.0 - b) - 2.0 * k * c * (1.0 - c)) / (1.0 - a) / D;
  sums[2] = b * ((k + 1.0) - 2.0 * k * c) / (1.0 - a) / D;
  return sums;
}

double beta(const LowerBoundParams& params) {
  require_admissible(params);
  const double a = params.a;
  const double b = params.b;
  const double c = params.k == 0 ? 0.0 : *params.c;
  const double k = params.k;
  const double D = (k + 1.0) - 2.0 * k * c * (1.0 - c);
  const double first = (-(k + 1.0) * b * (1.0 - b) + D * (1.0 - a)) / a;
  const double second = ((k + 1.0) * (1.0 - b) * (1.0 - b) - 2.0 * k * c * (1.0 - c) * (1.0 - b) +
                         b * ((k + 1.0) - 2.0 * k * c) * (a + b) + 2.0 * k * b * c) /
                        (1.0 - a);
  return (first + second) / D;
}

double beta_limit(double a, double b, double c) {
  const std::string reason = admissibility_violation_limit(a, b, c);
  if (!reason.empty()) throw DomainError("admissibility violated: " + reason);
  const double D = 1.0 - 2.0 * c * (1.0 - c);
  const double first = (-b * (1.0 - b) + D * (1.0 - a)) / a;
  const double second = ((1.0 - b) * (1.0 - b) - 2.0 * c * (1.0 - c) * (1.0 - b) +
                         b * (1.0 - 2.0 * c) * (a + b) + 2.0 * b * c) /
                        (1.0 - a);
  return (first + second) / D;
}

BoundRow optimize_beta(std::optional<int> k) {
  if (k && *k < 0) throw DomainError("k must be nonnegative, got " + std::to_string(*k));
  constexpr double kStep = 0.02;
  constexpr std::size_t kStarts = 5;

  if (k && *k == 0) {
    auto f = [](const std::vector<double>& v) {
      const LowerBoundParams p{v[0], v[1], std::nullopt, 0};
      return admissibility_violation(p).empty() ? beta(p) : kInf;
    };
    const auto best = internal::grid_then_nelder_mead(f, {0.0, 0.0}, {1.0, 0.5}, kStep, kStarts);
    return {3, best.x[0], best.x[1], std::nullopt, best.value, 1.0 + 2.0 / best.value};
  }

  std::function<double(const std::vector<double>&)> f;
  if (k) {
    f = [k = *k](const std::vector<double>& v) {
      const LowerBoundParams p{v[0], v[1], v[2], k};
      return admissibility_violation(p).empty() ? beta(p) : kInf;
    };
  } else {
    f = [](const std::vector<double>& v) {
      return admissibility_violation_limit(v[0], v[1], v[2]).empty() ? beta_limit(v[0], v[1], v[2])
                                                                      : kInf;
    };
  }
  const auto best = internal::grid_then_nelder_mead(f, {0.0, 0.0, 0.0}, {1.0, 0.5, 0.5}, kStep,
                                                    kStarts);
  std::optional<int> m;
  if (k) m = *k + 3;
  return {m, best.x[0], best.x[1], best.x[2], best.value, 1.0 + 2.0 / best.value};
}

std::vector<BoundRow> published_table() {
  return {
      {3, 0.473356, 0.423961, std::nullopt, 1.94907, 2.02613},
      {4, 0.459994, 0.406749, 0.363254, 1.90554, 2.04957},
      {5, 0.452953, 0.400474, 0.373050, 1.88106, 2.06323},
      {6, 0.448571, 0.397287, 0.378427, 1.86556, 2.07206},
      {7, 0.445576, 0.395377, 0.381835, 1.85490, 2.07822},
      {8, 0.443396, 0.394112, 0.38419, 1.84712, 2.08276},
      {9, 0.441738, 0.393215, 0.385916, 1.84120, 2.08625},
      {10, 0.440434, 0.392546, 0.387236, 1.83654, 2.08900},
      {50, 0.431584, 0.388789, 0.395418, 1.80493, 2.10807},
      {100, 0.430538, 0.388426, 0.396305, 1.80121, 2.11036},
      {1000, 0.429608, 0.388115, 0.397081, 1.79790, 2.11241},
      {std::nullopt, 0.429505, 0.388082, 0.397166, 1.79753, 2.11264},
  };
}

std::string bound_rows_csv(std::span<const BoundRow> rows) {
  std::ostringstream out;
  out << "m,a,b,c,beta,distortion_lb\n";
  for (const BoundRow& row : rows) {
    out << (row.m ? std::to_string(*row.m) : "inf") << ',' << format_number(row.a) << ','
        << format_number(row.b) << ',' << (row.c ? format_number(*row.c) : "") << ','
        << format_number(row.beta) << ',' << format_number(row.distortion_lb) << '\n';
  }
  return out.str();
}

const char* to_string(Case which) {
  switch (which) {
    case Case::kI: return "I";
    case Case::kII: return "II";
    case Case::kIII: return "III";
  }
  return "?";
}

bool in_case_region(Case which, double x, double y, double z, double tolerance) {
  const double t = tolerance;
  for (double v : {x, y, z}) {
    if (v < -t || v > 1.0 + t) return false;
  }
  switch (which) {
    case Case::kI: return x + y >= 1.0 - t && x + z <= 1.0 + t && y >= z - t;
    case Case::kII: return x + y <= 1.0 + t && x + z <= 1.0 + t && x + y + z >= 1.0 - t;
    case Case::kIII: return x + y <= 1.0 + t && x + z >= 1.0 - t;
  }
  return false;
}

double case_objective(Case which, double x, double y, double z) {
  const double det = x * y * z + (1.0 - x) * (1.0 - y) * (1.0 - z);
  if (det <= 1e-12) {
    throw DomainError("comparisons matrix is singular at (" + format_number(x) + ", " +
                      format_number(y) + ", " + format_number(z) + ")");
  }
  double numerator = 0.0;
  switch (which) {
    case Case::kI:
      numerator = x * x * (-y + z + 1.0) - x * (y - z - 1.0) * (y + z - 2.0) + y * (2.0 * y - 3.0) +
                  (z - 1.0) * z + 2.0;
      break;
    case Case::kII:
      numerator = x * x * (y + z - 1.0) + x * x * x + x * (-y * z + z - 1.0) -
                  (y * (z - 1.0) - 2.0 * z) * (y + z) - 2.0 * y - 3.0 * z + 2.0;
      break;
    case Case::kIII:
      numerator = x * x * (y - z + 2.0) + x * ((y - 1.0) * y - (z - 3.0) * z - 3.0) +
                  y * (z - 1.0) + (z - 2.0) * z + 2.0;
      break;
  }
  return numerator / det;
}

CaseMinimum minimize_case(Case which) {
  auto f = [which](const std::vector<double>& v) {
    if (!in_case_region(which, v[0], v[1], v[2])) return kInf;
    const double det = v[0] * v[1] * v[2] + (1.0 - v[0]) * (1.0 - v[1]) * (1.0 - v[2]);
    if (det <= 1e-12) return kInf;
    return case_objective(which, v[0], v[1], v[2]);
  };
  const auto best = internal::grid_then_nelder_mead(f, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, 0.02, 5);
  return {best.x[0], best.x[1], best.x[2], best.value};
}

UpperBoundConstants ub_0123_constants() {
  auto cubic = [](double y) { return ((y - 1.0) * y + 2.0) * y - 1.0; };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (cubic(mid) < 0.0 ? lo : hi) = mid;
  }
  UpperBoundConstants out;
  out.y_star = 0.5 * (lo + hi);
  out.objective_lb = 1.0 / out.y_star;
  out.distortion_ub = 1.0 + 2.0 / out.objective_lb;
  out.improved_objective_lb = (5.0 + std::sqrt(31.0)) / 6.0;
  out.improved_distortion_ub = 1.0 + 2.0 / out.improved_objective_lb;
  return out;
}

double clevermatrix_bound(std::span<const double> x) {
  double norm2 = 0.0;
  for (double v : x) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("vector entries must be nonnegative");
    norm2 += v * v;
  }
  if (std::sqrt(norm2) > 1.0 + 1e-12) {
    throw DomainError("vector norm " + format_number(std::sqrt(norm2)) + " exceeds 1");
  }
  return 1.0 + std::sqrt(std::max(0.0, 1.0 - norm2));
}

}  // namespace distortion
