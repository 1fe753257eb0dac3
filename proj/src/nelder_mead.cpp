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

#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace distortion::internal {
namespace {

using Point = std::vector<double>;

Point affine(const Point& from, const Point& to, double t) {
  // from + t * (to - from)
  Point out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] + t * (to[i] - from[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const Point&)>& f, Point start,
                             const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  std::vector<Point> simplex{start};
  for (std::size_t i = 0; i < n; ++i) {
    Point p = start;
    p[i] += options.initial_step;
    simplex.push_back(std::move(p));
  }
  std::vector<double> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  std::size_t iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0.0;
    for (const Point& p : simplex) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) d2 += (p[i] - simplex[best][i]) * (p[i] - simplex[best][i]);
      diameter = std::max(diameter, std::sqrt(d2));
    }
    if (values[worst] - values[best] <= options.ftol && diameter <= options.xtol) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
    }

    const Point reflected = affine(centroid, simplex[worst], -1.0);
    const double fr = f(reflected);
    if (fr < values[best]) {
      const Point expanded = affine(centroid, simplex[worst], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Point contracted = outside ? affine(centroid, reflected, 0.5)
                                     : affine(centroid, simplex[worst], 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k == best) continue;
      simplex[k] = affine(simplex[best], simplex[k], 0.5);
      values[k] = f(simplex[k]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], iteration};
}

NelderMeadResult grid_then_nelder_mead(const std::function<double(const Point&)>& f,
                                       const Point& lower, const Point& upper, double step,
                                       std::size_t starts, const NelderMeadOptions& options) {
  const std::size_t n = lower.size();
  std::vector<std::size_t> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] = static_cast<std::size_t>(std::floor((upper[i] - lower[i]) / step + 1e-9)) + 1;
  }

  std::vector<std::pair<double, Point>> finite;
  std::vector<std::size_t> index(n, 0);
  for (;;) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = lower[i] + step * static_cast<double>(index[i]);
    const double v = f(p);
    if (std::isfinite(v)) finite.emplace_back(v, std::move(p));
    std::size_t i = 0;
    while (i < n && ++index[i] == counts[i]) index[i++] = 0;
    if (i == n) break;
  }

  NelderMeadResult best{{}, std::numeric_limits<double>::infinity(), 0};
  if (finite.empty()) return best;
  std::stable_sort(finite.begin(), finite.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t s = 0; s < std::min(starts, finite.size()); ++s) {
    NelderMeadResult run = nelder_mead(f, finite[s].second, options);
    // A restart shakes the simplex loose when it has collapsed against a
    // barrier before converging.
    run = nelder_mead(f, run.x, options);
    if (run.value < best.value) best = std::move(run);
  }
  return best;
}

}  // namespace distortion::internal
