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

#include "distortion/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "distortion/errors.hpp"

namespace distortion {
namespace {

using nlohmann::json;

json number(double value, std::optional<int> digits = kOutputDigits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return digits ? round_significant(value, *digits) : value;
}

json numbers(std::span<const double> values, std::optional<int> digits = kOutputDigits) {
  json out = json::array();
  for (double v : values) out.push_back(number(v, digits));
  return out;
}

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const json& field(const json& object, const char* key, const char* where) {
  if (!object.is_object()) throw ParseError(std::string(where) + " must be a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

int integer(const json& value, const char* what) {
  if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return value.get<int>();
}

double real(const json& value, const char* what) {
  if (!value.is_number()) throw ParseError(std::string(what) + " must be a number");
  return value.get<double>();
}

json metric_json(const MetricSpace& metric, std::optional<int> digits) {
  json rows = json::array();
  for (std::size_t i = 0; i < static_cast<std::size_t>(metric.candidates()); ++i) {
    rows.push_back(numbers(metric.distances().row(i), digits));
  }
  return {{"candidates", metric.candidates()}, {"types", metric.types()}, {"d", rows}};
}

const char* kind_name(MetricViolation::Kind kind) {
  switch (kind) {
    case MetricViolation::Kind::kDimension: return "dimension";
    case MetricViolation::Kind::kNonFinite: return "non-finite";
    case MetricViolation::Kind::kNegative: return "negative";
    case MetricViolation::Kind::kOrdinal: return "ordinal";
    case MetricViolation::Kind::kClosure: return "closure";
  }
  return "unknown";
}

}  // namespace

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

Election parse_election(std::string_view text) {
  const json doc = parse_document(text, "election document");
  const int m = integer(field(doc, "m", "election document"), "\"m\"");
  const json& profile = field(doc, "profile", "election document");
  if (!profile.is_array()) throw ParseError("\"profile\" must be an array");
  std::vector<RankingType> types;
  for (const json& entry : profile) {
    const json& ranking = field(entry, "ranking", "profile entry");
    if (!ranking.is_array()) throw ParseError("\"ranking\" must be an array");
    RankingType type;
    for (const json& c : ranking) type.ranking.push_back(integer(c, "ranking entry"));
    type.weight = real(field(entry, "weight", "profile entry"), "\"weight\"");
    types.push_back(std::move(type));
  }
  return Election::create(m, std::move(types));
}

Election load_election(const std::filesystem::path& path) { return parse_election(read_file(path)); }

std::string election_to_json(const Election& election) {
  json profile = json::array();
  for (const RankingType& type : election.profile()) {
    profile.push_back({{"ranking", type.ranking}, {"weight", type.weight}});
  }
  return json{{"m", election.candidates()}, {"profile", profile}}.dump(2);
}

MetricSpace parse_metric(std::string_view text, const Election& election) {
  const json doc = parse_document(text, "metric document");
  const int m = integer(field(doc, "candidates", "metric document"), "\"candidates\"");
  const int types = integer(field(doc, "types", "metric document"), "\"types\"");
  if (m != election.candidates() || types < 0 ||
      static_cast<std::size_t>(types) != election.type_count()) {
    throw DomainError("metric is " + std::to_string(m) + "x" + std::to_string(types) +
                      " but the election has " + std::to_string(election.candidates()) +
                      " candidates and " + std::to_string(election.type_count()) + " types");
  }
  const json& rows = field(doc, "d", "metric document");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(m)) {
    throw ParseError("\"d\" must hold one row per candidate");
  }
  Matrix d(static_cast<std::size_t>(m), static_cast<std::size_t>(types));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(types)) {
      throw ParseError("row " + std::to_string(i + 1) + " of \"d\" must hold one entry per type");
    }
    for (std::size_t t = 0; t < rows[i].size(); ++t) d(i, t) = real(rows[i][t], "distance");
  }
  return MetricSpace(election, std::move(d));
}

MetricSpace load_metric(const std::filesystem::path& path, const Election& election) {
  return parse_metric(read_file(path), election);
}

std::string metric_to_json(const MetricSpace& metric, std::optional<int> digits) {
  return metric_json(metric, digits).dump();
}

std::string mechanism_result_to_json(const MechanismResult& result) {
  json out;
  out["mechanism"] = result.mechanism;
  out["lottery"] = numbers(result.lottery.probabilities());
  out["beta"] = result.beta ? number(*result.beta) : json(nullptr);
  out["guarantee"] = number(result.guarantee);
  out["convention"] = to_string(result.convention);
  out["scope"] = to_string(result.scope);
  out["tight_constraints"] = result.tight_constraints;
  return out.dump();
}

std::string adversary_result_to_json(const AdversaryResult& result) {
  json out;
  out["distortion"] = number(result.distortion);
  out["reference"] = result.reference;
  out["witness"] = result.witness ? metric_json(*result.witness, kOutputDigits) : json(nullptr);
  return out.dump();
}

std::string bound_row_to_json(const BoundRow& row) {
  json out;
  out["m"] = row.m ? json(*row.m) : json("inf");
  out["a"] = number(row.a);
  out["b"] = number(row.b);
  out["c"] = row.c ? number(*row.c) : json(nullptr);
  out["beta"] = number(row.beta);
  out["distortion_lb"] = number(row.distortion_lb);
  return out.dump();
}

std::string validation_report_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const MetricViolation& v : report.violations) {
    json entry{{"kind", kind_name(v.kind)},
               {"candidate", v.candidate},
               {"type", v.type + 1},
               {"edge", number(v.edge)},
               {"bound", number(v.bound)},
               {"message", v.message}};
    if (v.kind == MetricViolation::Kind::kOrdinal) entry["other"] = v.other;
    if (!v.witness.empty()) entry["witness"] = v.witness;
    violations.push_back(std::move(entry));
  }
  return json{{"ok", report.ok()}, {"violations", violations}}.dump();
}

}  // namespace distortion
