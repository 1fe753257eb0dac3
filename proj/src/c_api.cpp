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

#include "distortion/distortion.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distortion/adversary.hpp"
#include "distortion/bounds.hpp"
#include "distortion/election.hpp"
#include "distortion/errors.hpp"
#include "distortion/mechanisms.hpp"
#include "distortion/metric.hpp"
#include "distortion/serialize.hpp"

struct dist_election {
  distortion::Election value;
};
struct dist_metric {
  distortion::MetricSpace value;
};
struct dist_result {
  distortion::MechanismResult value;
};
struct dist_adversary {
  distortion::AdversaryResult value;
};

namespace {

using namespace distortion;

thread_local std::string last_error;

struct InvalidArgument : std::exception {
  explicit InvalidArgument(std::string m) : message(std::move(m)) {}
  const char* what() const noexcept override { return message.c_str(); }
  std::string message;
};

template <typename T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is null");
}

template <typename F>
dist_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return DIST_OK;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return DIST_ERR_INVALID_ARGUMENT;
  } catch (const ParseError& e) {
    last_error = e.what();
    return DIST_ERR_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return DIST_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DIST_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DIST_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DIST_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void check_candidate(const Election& election, int candidate) {
  if (candidate < 1 || candidate > election.candidates()) {
    throw InvalidArgument("candidate " + std::to_string(candidate) + " outside 1.." +
                          std::to_string(election.candidates()));
  }
}

LowerBoundParams to_params(const dist_bound_params& p) {
  LowerBoundParams out{p.a, p.b, std::nullopt, p.k};
  if (p.has_c) out.c = p.c;
  return out;
}

dist_bound_row to_row(const BoundRow& row) {
  return {row.m.value_or(0), row.a, row.b, row.c.value_or(0.0), row.c ? 1 : 0, row.beta,
          row.distortion_lb};
}

BoundRow from_row(const dist_bound_row& row) {
  BoundRow out{std::nullopt, row.a, row.b, std::nullopt, row.beta, row.distortion_lb};
  if (row.m > 0) out.m = row.m;
  if (row.has_c) out.c = row.c;
  return out;
}

Case to_case(dist_case which) {
  switch (which) {
    case DIST_CASE_I: return Case::kI;
    case DIST_CASE_II: return Case::kII;
    case DIST_CASE_III: return Case::kIII;
  }
  throw InvalidArgument("unknown case " + std::to_string(static_cast<int>(which)));
}

std::vector<MetricSpace> default_lp_a_metrics(const Election& election) {
  std::vector<MetricSpace> metrics;
  for (int i = 1; i <= election.candidates(); ++i) metrics.push_back(build_0123(election, i));
  return metrics;
}

Lottery read_lottery(const double* p, int m) {
  return Lottery::from_probabilities(std::vector<double>(p, p + m));
}

}  // namespace

extern "C" {

const char* dist_version(void) { return "0.1.0"; }

const char* dist_last_error(void) { return last_error.c_str(); }

void dist_string_free(char* s) { std::free(s); }

dist_status dist_election_create(int m, size_t types, const int* rankings, const double* weights,
                                 dist_election** out) {
  return guarded([&] {
    require(out, "out");
    require(rankings, "rankings");
    require(weights, "weights");
    if (m < 0) throw InvalidArgument("m is negative");
    std::vector<RankingType> profile(types);
    for (size_t t = 0; t < types; ++t) {
      const int* row = rankings + t * static_cast<size_t>(m);
      profile[t].ranking.assign(row, row + m);
      profile[t].weight = weights[t];
    }
    *out = new dist_election{Election::create(m, std::move(profile))};
  });
}

dist_status dist_election_from_json(const char* json, dist_election** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new dist_election{parse_election(json)};
  });
}

dist_status dist_election_load(const char* path, dist_election** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dist_election{load_election(path)};
  });
}

void dist_election_free(dist_election* election) { delete election; }

int dist_election_candidates(const dist_election* election) {
  return election ? election->value.candidates() : 0;
}

size_t dist_election_types(const dist_election* election) {
  return election ? election->value.type_count() : 0;
}

dist_status dist_election_to_json(const dist_election* election, char** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    *out = duplicate(election_to_json(election->value));
  });
}

dist_status dist_election_comparisons(const dist_election* election, double* out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    const Matrix M = comparisons_matrix(election->value);
    std::copy(M.data().begin(), M.data().end(), out);
  });
}

dist_status dist_election_plurality(const dist_election* election, double* out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    const std::vector<double> plu = plurality_vector(election->value);
    std::copy(plu.begin(), plu.end(), out);
  });
}

dist_status dist_metric_0123(const dist_election* election, int candidate, dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    check_candidate(election->value, candidate);
    *out = new dist_metric{build_0123(election->value, candidate)};
  });
}

dist_status dist_metric_13(const dist_election* election, int candidate, dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    check_candidate(election->value, candidate);
    *out = new dist_metric{build_13(election->value, candidate)};
  });
}

dist_status dist_metric_biased(const dist_election* election, const double* x,
                               dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(x, "x");
    require(out, "out");
    const auto m = static_cast<size_t>(election->value.candidates());
    *out = new dist_metric{build_biased(election->value, std::span<const double>(x, m))};
  });
}

dist_status dist_metric_generalized(const dist_election* election, const int* coalition,
                                    size_t size, dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    if (size > 0) require(coalition, "coalition");
    CandidateSet set;
    for (size_t i = 0; i < size; ++i) {
      check_candidate(election->value, coalition[i]);
      set.insert(coalition[i]);
    }
    *out = new dist_metric{build_generalized_0123(election->value, set)};
  });
}

dist_status dist_metric_from_json(const dist_election* election, const char* json,
                                  dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(json, "json");
    require(out, "out");
    *out = new dist_metric{parse_metric(json, election->value)};
  });
}

dist_status dist_metric_load(const dist_election* election, const char* path, dist_metric** out) {
  return guarded([&] {
    require(election, "election");
    require(path, "path");
    require(out, "out");
    *out = new dist_metric{load_metric(path, election->value)};
  });
}

void dist_metric_free(dist_metric* metric) { delete metric; }

dist_status dist_metric_to_json(const dist_metric* metric, int digits, char** out) {
  return guarded([&] {
    require(metric, "metric");
    require(out, "out");
    std::optional<int> d;
    if (digits > 0) d = digits;
    *out = duplicate(metric_to_json(metric->value, d));
  });
}

dist_status dist_metric_validate(const dist_metric* metric, int* ok, char** report) {
  return guarded([&] {
    require(metric, "metric");
    require(ok, "ok");
    const ValidationReport r = validate_metric(metric->value);
    *ok = r.ok() ? 1 : 0;
    if (report != nullptr) *report = duplicate(validation_report_to_json(r));
  });
}

dist_status dist_metric_social_cost(const dist_metric* metric, int candidate, double* out) {
  return guarded([&] {
    require(metric, "metric");
    require(out, "out");
    check_candidate(metric->value.election(), candidate);
    *out = social_cost(metric->value, candidate);
  });
}

dist_status dist_metric_distortion(const dist_metric* metric, const double* lottery,
                                   double* out) {
  return guarded([&] {
    require(metric, "metric");
    require(lottery, "lottery");
    require(out, "out");
    *out = distortion::distortion(metric->value, read_lottery(lottery, metric->value.candidates()));
  });
}

dist_status dist_mechanism_parse(const char* name, dist_mechanism* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    static const std::pair<const char*, dist_mechanism> kNames[] = {
        {"lpA", DIST_MECHANISM_LP_A},     {"lpB", DIST_MECHANISM_LP_B},
        {"lpC", DIST_MECHANISM_LP_C},     {"smart", DIST_MECHANISM_SMART},
        {"random", DIST_MECHANISM_RANDOM}, {"optimal3", DIST_MECHANISM_OPTIMAL3},
    };
    for (const auto& [text, value] : kNames) {
      if (std::strcmp(name, text) == 0) {
        *out = value;
        return;
      }
    }
    throw InvalidArgument(std::string("unknown mechanism '") + name + "'");
  });
}

dist_status dist_run_mechanism(const dist_election* election, dist_mechanism mechanism,
                               dist_result** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    const Election& e = election->value;
    switch (mechanism) {
      case DIST_MECHANISM_LP_A: {
        const std::vector<MetricSpace> metrics = default_lp_a_metrics(e);
        *out = new dist_result{lp_a_lottery(e, metrics)};
        return;
      }
      case DIST_MECHANISM_LP_B: *out = new dist_result{lp_b_lottery(e)}; return;
      case DIST_MECHANISM_LP_C: *out = new dist_result{lp_c_lottery(e)}; return;
      case DIST_MECHANISM_SMART: *out = new dist_result{smart_dictatorship(e)}; return;
      case DIST_MECHANISM_RANDOM: *out = new dist_result{random_dictatorship(e)}; return;
      case DIST_MECHANISM_OPTIMAL3: *out = new dist_result{optimal_lottery_m3(e)}; return;
    }
    throw InvalidArgument("unknown mechanism " + std::to_string(static_cast<int>(mechanism)));
  });
}

dist_status dist_run_lp_a(const dist_election* election, const dist_metric* const* metrics,
                          size_t count, dist_result** out) {
  return guarded([&] {
    require(election, "election");
    require(out, "out");
    if (count > 0) require(metrics, "metrics");
    std::vector<MetricSpace> list;
    for (size_t i = 0; i < count; ++i) {
      require(metrics[i], "metric");
      list.push_back(metrics[i]->value);
    }
    *out = new dist_result{lp_a_lottery(election->value, list)};
  });
}

void dist_result_free(dist_result* result) { delete result; }

int dist_result_has_beta(const dist_result* result) {
  return result && result->value.beta ? 1 : 0;
}

double dist_result_beta(const dist_result* result) {
  if (result == nullptr || !result->value.beta) return std::numeric_limits<double>::quiet_NaN();
  return *result->value.beta;
}

double dist_result_guarantee(const dist_result* result) {
  return result ? result->value.guarantee : std::numeric_limits<double>::quiet_NaN();
}

dist_status dist_result_lottery(const dist_result* result, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    const auto p = result->value.lottery.probabilities();
    std::copy(p.begin(), p.end(), out);
  });
}

dist_status dist_result_to_json(const dist_result* result, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = duplicate(mechanism_result_to_json(result->value));
  });
}

dist_status dist_worst_case(const dist_election* election, const double* lottery,
                            dist_adversary** out) {
  return guarded([&] {
    require(election, "election");
    require(lottery, "lottery");
    require(out, "out");
    const Lottery p = read_lottery(lottery, election->value.candidates());
    *out = new dist_adversary{worst_case_distortion(election->value, p)};
  });
}

void dist_adversary_free(dist_adversary* adversary) { delete adversary; }

double dist_adversary_distortion(const dist_adversary* adversary) {
  return adversary ? adversary->value.distortion : std::numeric_limits<double>::quiet_NaN();
}

int dist_adversary_reference(const dist_adversary* adversary) {
  return adversary ? adversary->value.reference : 0;
}

dist_status dist_adversary_witness(const dist_adversary* adversary, dist_metric** out) {
  return guarded([&] {
    require(adversary, "adversary");
    require(out, "out");
    if (!adversary->value.witness) throw DomainError("distortion is unbounded; no witness metric");
    *out = new dist_metric{*adversary->value.witness};
  });
}

dist_status dist_adversary_to_json(const dist_adversary* adversary, char** out) {
  return guarded([&] {
    require(adversary, "adversary");
    require(out, "out");
    *out = duplicate(adversary_result_to_json(adversary->value));
  });
}

dist_status dist_bound_check(const dist_bound_params* params) {
  return guarded([&] {
    require(params, "params");
    require_admissible(to_params(*params));
  });
}

dist_status dist_bound_beta(const dist_bound_params* params, double* out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = beta(to_params(*params));
  });
}

dist_status dist_bound_beta_limit(double a, double b, double c, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = beta_limit(a, b, c);
  });
}

dist_status dist_bound_column_sums(const dist_bound_params* params, double* out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const std::vector<double> sums = m_inverse_column_sums(to_params(*params));
    std::copy(sums.begin(), sums.end(), out);
  });
}

dist_status dist_bound_optimize(int m, dist_bound_row* out) {
  return guarded([&] {
    require(out, "out");
    if (m != 0 && m < 3) throw DomainError("m must be at least 3, got " + std::to_string(m));
    std::optional<int> k;
    if (m != 0) k = m - 3;
    *out = to_row(optimize_beta(k));
  });
}

size_t dist_bound_published_count(void) { return published_table().size(); }

dist_status dist_bound_published(size_t index, dist_bound_row* out) {
  return guarded([&] {
    require(out, "out");
    const std::vector<BoundRow> rows = published_table();
    if (index >= rows.size()) throw InvalidArgument("table index out of range");
    *out = to_row(rows[index]);
  });
}

dist_status dist_bound_rows_csv(const dist_bound_row* rows, size_t count, char** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(rows, "rows");
    std::vector<BoundRow> list;
    for (size_t i = 0; i < count; ++i) list.push_back(from_row(rows[i]));
    *out = duplicate(bound_rows_csv(list));
  });
}

dist_status dist_bound_row_to_json(const dist_bound_row* row, char** out) {
  return guarded([&] {
    require(row, "row");
    require(out, "out");
    *out = duplicate(bound_row_to_json(from_row(*row)));
  });
}

dist_status dist_lower_bound_election(int m, const dist_bound_params* params,
                                      dist_election** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = new dist_election{build_lower_bound_election(m, to_params(*params))};
  });
}

dist_status dist_case_objective(dist_case which, double x, double y, double z, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = case_objective(to_case(which), x, y, z);
  });
}

dist_status dist_minimize_case(dist_case which, double* point, double* value) {
  return guarded([&] {
    require(point, "point");
    require(value, "value");
    const CaseMinimum best = minimize_case(to_case(which));
    point[0] = best.x;
    point[1] = best.y;
    point[2] = best.z;
    *value = best.value;
  });
}

dist_status dist_ub_constants(double* out) {
  return guarded([&] {
    require(out, "out");
    const UpperBoundConstants u = ub_0123_constants();
    out[0] = u.y_star;
    out[1] = u.objective_lb;
    out[2] = u.distortion_ub;
    out[3] = u.improved_objective_lb;
    out[4] = u.improved_distortion_ub;
  });
}

}  // extern "C"
