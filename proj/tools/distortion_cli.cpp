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

// Command-line front end over the C API.
//
//   distortion-cli analyze ELECTION [--mechanism lpB] [--metric FILE]...
//   distortion-cli adversary ELECTION --lottery 0.5,0.5
//   distortion-cli optimal3 ELECTION
//   distortion-cli lowerbound --m 4 [--a A --b B --c C] [--emit FILE]
//   distortion-cli table --m 3..10,50,inf [--tol 1e-3]
//   distortion-cli verify-metric METRIC --election ELECTION
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distortion/distortion.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries a failed dist_status out of a verb.
struct ApiError : std::runtime_error {
  ApiError(dist_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  dist_status status;
};

void check(dist_status status) {
  if (status != DIST_OK) throw ApiError(status, dist_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Election = std::unique_ptr<dist_election, Deleter<dist_election, dist_election_free>>;
using Metric = std::unique_ptr<dist_metric, Deleter<dist_metric, dist_metric_free>>;
using Result = std::unique_ptr<dist_result, Deleter<dist_result, dist_result_free>>;
using Adversary = std::unique_ptr<dist_adversary, Deleter<dist_adversary, dist_adversary_free>>;

std::string take(char* s) {
  std::string out(s);
  dist_string_free(s);
  return out;
}

Election load(const std::string& path) {
  dist_election* e = nullptr;
  check(dist_election_load(path.c_str(), &e));
  return Election(e);
}

std::vector<double> parse_lottery(const std::string& text) {
  std::vector<double> p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--lottery: '" + item + "' is not a number");
    }
  }
  return p;
}

// "3..10,50,inf" -> {3, ..., 10, 50, 0}; 0 stands for infinity.
std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> ms;
  std::stringstream in(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("--m: '" + s + "' is not an integer");
    }
  };
  while (std::getline(in, item, ',')) {
    if (item == "inf") {
      ms.push_back(0);
      continue;
    }
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      ms.push_back(number(item));
      continue;
    }
    const int lo = number(item.substr(0, dots));
    const int hi = number(item.substr(dots + 2));
    if (hi < lo) throw UsageError("--m: empty range '" + item + "'");
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
  }
  if (ms.empty()) throw UsageError("--m: no values given");
  return ms;
}

int parse_single_m(const std::string& text) {
  const std::vector<int> ms = parse_m_list(text);
  if (ms.size() != 1) throw UsageError("--m takes a single value here");
  return ms.front();
}

int run_analyze(const std::string& election_path, const std::string& mechanism_name,
                const std::vector<std::string>& metric_paths) {
  const Election election = load(election_path);
  dist_mechanism mechanism;
  if (dist_mechanism_parse(mechanism_name.c_str(), &mechanism) != DIST_OK) {
    throw UsageError(dist_last_error());
  }
  if (!metric_paths.empty() && mechanism != DIST_MECHANISM_LP_A) {
    throw UsageError("--metric only applies to --mechanism lpA");
  }
  dist_result* raw = nullptr;
  if (metric_paths.empty()) {
    check(dist_run_mechanism(election.get(), mechanism, &raw));
  } else {
    std::vector<Metric> metrics;
    std::vector<const dist_metric*> views;
    for (const auto& path : metric_paths) {
      dist_metric* m = nullptr;
      check(dist_metric_load(election.get(), path.c_str(), &m));
      metrics.emplace_back(m);
      views.push_back(m);
    }
    check(dist_run_lp_a(election.get(), views.data(), views.size(), &raw));
  }
  const Result result(raw);
  char* json = nullptr;
  check(dist_result_to_json(result.get(), &json));
  std::cout << take(json) << '\n';
  return kExitOk;
}

int run_adversary(const std::string& election_path, const std::string& lottery_text) {
  const Election election = load(election_path);
  const std::vector<double> p = parse_lottery(lottery_text);
  const auto m = static_cast<std::size_t>(dist_election_candidates(election.get()));
  if (p.size() != m) {
    throw ApiError(DIST_ERR_DOMAIN, "--lottery has " + std::to_string(p.size()) +
                                        " entries for " + std::to_string(m) + " candidates");
  }
  dist_adversary* raw = nullptr;
  check(dist_worst_case(election.get(), p.data(), &raw));
  const Adversary adversary(raw);
  if (std::isinf(dist_adversary_distortion(adversary.get()))) {
    std::cerr << "lottery weights an undominatable candidate; distortion is unbounded\n";
  }
  char* json = nullptr;
  check(dist_adversary_to_json(adversary.get(), &json));
  std::cout << take(json) << '\n';
  return kExitOk;
}

int run_optimal3(const std::string& election_path) {
  return run_analyze(election_path, "optimal3", {});
}

int run_lowerbound(const std::string& m_text, std::optional<double> a, std::optional<double> b,
                   std::optional<double> c, const std::string& emit) {
  const int m = parse_single_m(m_text);
  if (m != 0 && m < 3) throw ApiError(DIST_ERR_DOMAIN, "m must be at least 3");
  const bool given = a || b || c;
  dist_bound_row row{};
  if (!given) {
    check(dist_bound_optimize(m, &row));
  } else {
    if (!a || !b) throw UsageError("--a and --b must be given together");
    if (m == 3 && c) throw UsageError("--c does not apply when m = 3");
    if (m != 3 && !c) throw UsageError("--c is required when m >= 4");
    row.m = m;
    row.a = *a;
    row.b = *b;
    row.has_c = c ? 1 : 0;
    row.c = c.value_or(0.0);
    if (m == 0) {
      check(dist_bound_beta_limit(*a, *b, *c, &row.beta));
    } else {
      const dist_bound_params params{*a, *b, row.c, row.has_c, m - 3};
      check(dist_bound_beta(&params, &row.beta));
    }
    row.distortion_lb = 1.0 + 2.0 / row.beta;
  }

  if (!emit.empty()) {
    if (m == 0) throw ApiError(DIST_ERR_DOMAIN, "--emit needs a finite m");
    const dist_bound_params params{row.a, row.b, row.c, row.has_c, m - 3};
    dist_election* raw = nullptr;
    check(dist_lower_bound_election(m, &params, &raw));
    const Election election(raw);
    char* json = nullptr;
    check(dist_election_to_json(election.get(), &json));
    std::ofstream out(emit);
    out << take(json) << '\n';
    if (!out) throw ApiError(DIST_ERR_PARSE, "cannot write " + emit);
  }

  char* json = nullptr;
  check(dist_bound_row_to_json(&row, &json));
  std::cout << take(json) << '\n';
  return kExitOk;
}

int run_table(const std::string& m_text, std::optional<double> tolerance) {
  const std::vector<int> ms = parse_m_list(m_text);
  std::vector<dist_bound_row> rows;
  for (int m : ms) {
    if (m != 0 && m < 3) throw ApiError(DIST_ERR_DOMAIN, "m must be at least 3");
    dist_bound_row row{};
    check(dist_bound_optimize(m, &row));
    rows.push_back(row);
  }
  char* csv = nullptr;
  check(dist_bound_rows_csv(rows.data(), rows.size(), &csv));
  std::cout << take(csv);

  if (!tolerance) return kExitOk;
  int status = kExitOk;
  const std::size_t published = dist_bound_published_count();
  for (const dist_bound_row& row : rows) {
    for (std::size_t i = 0; i < published; ++i) {
      dist_bound_row ref{};
      check(dist_bound_published(i, &ref));
      if (ref.m != row.m) continue;
      const double beta_err = std::abs(row.beta - ref.beta);
      const double lb_err = std::abs(row.distortion_lb - ref.distortion_lb);
      if (beta_err > *tolerance || lb_err > *tolerance) {
        std::cerr << "m=" << (row.m ? std::to_string(row.m) : "inf")
                  << ": differs from the published row (beta error " << beta_err
                  << ", distortion error " << lb_err << ")\n";
        status = kExitDomain;
      }
    }
  }
  return status;
}

int run_verify_metric(const std::string& metric_path, const std::string& election_path) {
  const Election election = load(election_path);
  dist_metric* raw = nullptr;
  check(dist_metric_load(election.get(), metric_path.c_str(), &raw));
  const Metric metric(raw);
  int ok = 0;
  char* report = nullptr;
  check(dist_metric_validate(metric.get(), &ok, &report));
  std::cout << take(report) << '\n';
  if (!ok) std::cerr << "metric is not consistent with the election\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric distortion mechanisms, adversaries and lower bounds"};
  app.require_subcommand(1);

  std::string election_path;
  std::string mechanism = "lpB";
  std::vector<std::string> metric_paths;
  auto* analyze = app.add_subcommand("analyze", "Run a mechanism on an election");
  analyze->add_option("election", election_path, "Election JSON file")->required();
  analyze->add_option("--mechanism", mechanism, "lpA, lpB, lpC, smart, random or optimal3")
      ->capture_default_str();
  analyze->add_option("--metric", metric_paths, "Metric JSON files for lpA (default: d_1..d_m)");

  std::string lottery;
  auto* adversary = app.add_subcommand("adversary", "Worst-case distortion of a lottery");
  adversary->add_option("election", election_path, "Election JSON file")->required();
  adversary->add_option("--lottery", lottery, "Comma-separated probabilities")->required();

  auto* optimal3 = app.add_subcommand("optimal3", "Instance-optimal lottery for 3 candidates");
  optimal3->add_option("election", election_path, "Election JSON file")->required();

  std::string m_text;
  std::optional<double> a, b, c;
  std::string emit;
  auto* lowerbound = app.add_subcommand("lowerbound", "Evaluate or optimize a lower-bound row");
  lowerbound->add_option("--m", m_text, "Number of candidates, or inf")->required();
  lowerbound->add_option("--a", a, "Parameter a");
  lowerbound->add_option("--b", b, "Parameter b");
  lowerbound->add_option("--c", c, "Parameter c (m >= 4)");
  lowerbound->add_option("--emit", emit, "Write the lower-bound election (m <= 10)");

  std::optional<double> tolerance;
  auto* table = app.add_subcommand("table", "Reproduce lower-bound table rows as CSV");
  table->add_option("--m", m_text, "Comma list of m values, ranges lo..hi, or inf")->required();
  table->add_option("--tol", tolerance, "Fail if beta or the bound differs from the published row");

  std::string metric_path;
  auto* verify = app.add_subcommand("verify-metric", "Validate a metric against an election");
  verify->add_option("metric", metric_path, "Metric JSON file")->required();
  verify->add_option("--election", election_path, "Election JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(election_path, mechanism, metric_paths);
    if (*adversary) return run_adversary(election_path, lottery);
    if (*optimal3) return run_optimal3(election_path);
    if (*lowerbound) return run_lowerbound(m_text, a, b, c, emit);
    if (*table) return run_table(m_text, tolerance);
    if (*verify) return run_verify_metric(metric_path, election_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.status == DIST_ERR_INVALID_ARGUMENT) return kExitUsage;
    if (e.status == DIST_ERR_INTERNAL) return kExitInternal;
    return kExitDomain;
  }
  return kExitUsage;
}
