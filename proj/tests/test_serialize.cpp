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

#include <cmath>
#include <limits>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "distortion/adversary.hpp"
#include "distortion/errors.hpp"
#include "distortion/serialize.hpp"
#include "oracles/fixtures.hpp"

using namespace distortion;
using nlohmann::json;

TEST_CASE("number formatting") {
  CHECK(format_number(2.0261284) == "2.02613");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(round_significant(1.949074123) == 1.94907);
  CHECK(round_significant(0.0) == 0.0);
}

TEST_CASE("election round trip") {
  const Election e = fixtures::tight3();
  const Election back = parse_election(election_to_json(e));
  REQUIRE(back.type_count() == e.type_count());
  for (std::size_t t = 0; t < e.type_count(); ++t) {
    CHECK(back.type(t).ranking == e.type(t).ranking);
    CHECK_NEAR(back.weight(t), e.weight(t), 1e-15);
  }
}

TEST_CASE("election parse errors") {
  CHECK_THROWS_AS(parse_election("{not json"), ParseError);
  CHECK_THROWS_AS(parse_election(R"({"m": 3})"), ParseError);
  CHECK_THROWS_AS(parse_election(R"({"m": 3, "profile": 4})"), ParseError);
  CHECK_THROWS_AS(parse_election(R"({"m": 2, "profile": [{"ranking": [1, 1], "weight": 1}]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_election(R"({"m": 2, "profile": [{"ranking": [1, 2], "weight": 0.5}]})"),
                  DomainError);
  CHECK_THROWS_AS(load_election("/nonexistent/election.json"), ParseError);
}

TEST_CASE("metric round trip at full precision") {
  const Election e = fixtures::tight3();
  const MetricSpace d = build_0123(e, 2);
  const MetricSpace back = parse_metric(metric_to_json(d, std::nullopt), e);
  for (int i = 1; i <= 3; ++i) {
    for (std::size_t t = 0; t < e.type_count(); ++t) CHECK(back(i, t) == d(i, t));
  }
  CHECK_THROWS_AS(parse_metric(R"({"candidates": 2, "types": 3, "d": []})", e), DomainError);
  CHECK_THROWS_AS(parse_metric(R"({"candidates": 3, "types": 3, "d": [[1]]})", e), ParseError);
}

TEST_CASE("mechanism result document") {
  const json doc = json::parse(mechanism_result_to_json(lp_b_lottery(fixtures::tight3())));
  CHECK(doc["mechanism"] == "lpB");
  CHECK(doc["beta"].get<double>() == doctest::Approx(1.94907).epsilon(1e-6));
  CHECK(doc["guarantee"].get<double>() == doctest::Approx(2.02613).epsilon(1e-6));
  CHECK(doc["lottery"].size() == 3);
  CHECK(doc["convention"].is_string());
  CHECK(doc["scope"].is_string());
}

TEST_CASE("unbounded beta serializes as inf") {
  const json doc = json::parse(mechanism_result_to_json(lp_b_lottery(fixtures::unanimous(3))));
  CHECK(doc["beta"] == "inf");
  CHECK(doc["guarantee"].get<double>() == 1.0);
}

TEST_CASE("adversary result document") {
  const Election e = fixtures::half_half();
  const json doc = json::parse(adversary_result_to_json(worst_case_distortion(e, Lottery::uniform(2))));
  CHECK(doc["distortion"].get<double>() == doctest::Approx(2.0));
  CHECK(doc["witness"].is_object());
  CHECK(doc["reference"].is_number_integer());
}

TEST_CASE("bound row and validation documents") {
  const json row = json::parse(bound_row_to_json(published_table().back()));
  CHECK(row["m"] == "inf");
  const json report = json::parse(validation_report_to_json(validate_metric(build_0123(fixtures::tight3(), 1))));
  CHECK(report["ok"] == true);
  CHECK(report["violations"].empty());
  const Election e = fixtures::half_half();
  const json bad = json::parse(validation_report_to_json(validate_metric(MetricSpace(e, Matrix(2, 2, -1.0)))));
  CHECK(bad["ok"] == false);
  CHECK(bad["violations"][0]["kind"].is_string());
}
