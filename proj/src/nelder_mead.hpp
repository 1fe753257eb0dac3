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

#ifndef DISTORTION_SRC_NELDER_MEAD_HPP_
#define DISTORTION_SRC_NELDER_MEAD_HPP_

#include <cstddef>
#include <functional>
#include <vector>

namespace distortion::internal {

struct NelderMeadOptions {
  double initial_step = 0.01;
  double ftol = 1e-10;  // spread of objective values across the simplex
  double xtol = 1e-9;   // largest vertex distance from the best vertex
  std::size_t max_iterations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
};

// Derivative-free minimization. The objective may return +inf to reject a
// point (used as a barrier for constrained regions).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& options = {});

// Evaluates f on a lattice with the given per-coordinate bounds and step,
// then refines the `starts` best finite lattice points with Nelder-Mead.
NelderMeadResult grid_then_nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                       const std::vector<double>& lower,
                                       const std::vector<double>& upper, double step,
                                       std::size_t starts, const NelderMeadOptions& options = {});

}  // namespace distortion::internal

#endif  // DISTORTION_SRC_NELDER_MEAD_HPP_
