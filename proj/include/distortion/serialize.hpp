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

#ifndef DISTORTION_SERIALIZE_HPP_
#define DISTORTION_SERIALIZE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "distortion/adversary.hpp"
#include "distortion/bounds.hpp"
#include "distortion/election.hpp"
#include "distortion/mechanisms.hpp"
#include "distortion/metric.hpp"

namespace distortion {

inline constexpr int kOutputDigits = 6;

// Rounds to the given number of significant digits; non-finite values pass
// through unchanged.
double round_significant(double value, int digits = kOutputDigits);

// "%.6g"-style text; infinities print as "inf" / "-inf".
std::string format_number(double value, int digits = kOutputDigits);

// {"m": 3, "profile": [{"ranking": [1, 3, 2], "weight": 0.47}, ...]}.
// Throws ParseError for malformed documents and DomainError for profiles
// that violate election invariants.
Election parse_election(std::string_view text);
Election load_election(const std::filesystem::path& path);
// Weights are written at full precision so the document round-trips.
std::string election_to_json(const Election& election);

// {"candidates": m, "types": T, "d": [[d(1,t1), ...], ...]} with one row
// per candidate; the election supplies the type order.
MetricSpace parse_metric(std::string_view text, const Election& election);
MetricSpace load_metric(const std::filesystem::path& path, const Election& election);
// nullopt digits writes full precision.
std::string metric_to_json(const MetricSpace& metric,
                           std::optional<int> digits = kOutputDigits);

std::string mechanism_result_to_json(const MechanismResult& result);
std::string adversary_result_to_json(const AdversaryResult& result);
std::string bound_row_to_json(const BoundRow& row);
std::string validation_report_to_json(const ValidationReport& report);

}  // namespace distortion

#endif  // DISTORTION_SERIALIZE_HPP_
