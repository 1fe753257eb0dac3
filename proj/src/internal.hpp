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

#ifndef DISTORTION_SRC_INTERNAL_HPP_
#define DISTORTION_SRC_INTERNAL_HPP_

#include <string>

#include "distortion/lp.hpp"
#include "distortion/mechanisms.hpp"

namespace distortion::internal {

// Solves max 1.p s.t. A p <= b, p >= 0 for a nonnegative A and turns the
// optimum into a normalized lottery with its distortion guarantee.
MechanismResult lottery_from_lp(std::string name, const LpProblem& lp, Convention convention,
                                Scope scope);

}  // namespace distortion::internal

#endif  // DISTORTION_SRC_INTERNAL_HPP_
