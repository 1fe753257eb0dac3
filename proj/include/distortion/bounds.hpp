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

#ifndef DISTORTION_BOUNDS_HPP_
#define DISTORTION_BOUNDS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distortion/election.hpp"
#include "distortion/matrix.hpp"

namespace distortion {

// Parameters of the lower-bound family. The comparisons matrix has rows
// (0, a, a, ...), (1-a, 0, b, ...), (1-a, 1-b, 0, c, ...) followed by k = m-3
// rows with 1/2 between the trailing candidates; plurality is
// (a, b, 1-a-b, 0, ...). c is ignored when k = 0.
struct LowerBoundParams {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> c;
  int k = 0;
};

inline constexpr double kAdmissibilityMargin = 1e-9;
inline constexpr int kMaxExplicitCandidates = 10;

// Empty string if admissible, otherwise the first violated condition.
std::string admissibility_violation(const LowerBoundParams& params);
// Same conditions for the k -> infinity limit (c required).
std::string admissibility_violation_limit(double a, double b, double c);

// Throw DomainError on an inadmissible point.
void require_admissible(const LowerBoundParams& params);

// The target comparisons matrix and plurality vector for m = k + 3.
Matrix lower_bound_comparisons(const LowerBoundParams& params);
std::vector<double> lower_bound_plurality(const LowerBoundParams& params);

// Realizes the family for 3 <= m <= 10; params.k must equal m - 3.
Election build_lower_bound_election(int m, const LowerBoundParams& params);

// Closed-form 1^T M^{-1}; length k + 3.
std::vector<double> m_inverse_column_sums(const LowerBoundParams& params);

// 1^T M^{-1} (1 - plu); any lottery on the family has LP (B) value <= beta.
double beta(const LowerBoundParams& params);
double beta_limit(double a, double b, double c);

struct BoundRow {
  std::optional<int> m;  // nullopt for the m -> infinity row
  double a = 0.0;
  double b = 0.0;
  std::optional<double> c;
  double beta = 0.0;
  double distortion_lb = 0.0;
};

// Minimizes beta over the admissible region for m = k + 3 (nullopt: the
// limit). Grid search with step 0.02, then Nelder-Mead from the best 5.
BoundRow optimize_beta(std::optional<int> k);

// The rows printed in the reference table (m = 3..10, 50, 100, 1000, inf).
std::vector<BoundRow> published_table();

// CSV with header m,a,b,c,beta,distortion_lb; 6 significant digits.
std::string bound_rows_csv(std::span<const BoundRow> rows);

// Three-candidate worst-case analysis. With
//   M = [[0, x, 1-y], [1-x, 0, z], [y, 1-z, 0]]
// and plurality per case
//   I: (1-y, z, y-z)   II: (x, z, 1-x-z)   III: (x, 1-x, 0),
// the objective is 1^T M^{-1} (1 - plu).
enum class Case { kI, kII, kIII };

const char* to_string(Case which);

// Region constraints for each case, all inside [0,1]^3:
//   I: x+y >= 1, x+z <= 1, y >= z
//   II: x+y <= 1, x+z <= 1, x+y+z >= 1
//   III: x+y <= 1, x+z >= 1
bool in_case_region(Case which, double x, double y, double z, double tolerance = 0.0);

// Throws DomainError when det M = xyz + (1-x)(1-y)(1-z) <= 1e-12.
double case_objective(Case which, double x, double y, double z);

struct CaseMinimum {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double value = 0.0;
};

CaseMinimum minimize_case(Case which);

struct UpperBoundConstants {
  double y_star = 0.0;          // real root of y^3 - y^2 + 2y - 1
  double objective_lb = 0.0;    // 1 / y_star = 1 + sqrt(y_star)
  double distortion_ub = 0.0;   // 1 + 2 / objective_lb
  double improved_objective_lb = 0.0;  // (5 + sqrt(31)) / 6
  double improved_distortion_ub = 0.0;
};

UpperBoundConstants ub_0123_constants();

// 1 + sqrt(1 - |x|^2) for nonnegative x with |x| <= 1.
double clevermatrix_bound(std::span<const double> x);

}  // namespace distortion

#endif  // DISTORTION_BOUNDS_HPP_
