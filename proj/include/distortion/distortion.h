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

/* C interface to the distortion library. Every object is an opaque handle
 * released with its _free function; every fallible call returns a
 * dist_status and leaves details in dist_last_error(). Strings returned
 * through char** are owned by the caller and released with
 * dist_string_free. Candidates are numbered from 1. */

#ifndef DISTORTION_DISTORTION_H_
#define DISTORTION_DISTORTION_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(DIST_BUILDING_LIBRARY)
#define DIST_API __declspec(dllexport)
#else
#define DIST_API __declspec(dllimport)
#endif
#else
#define DIST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dist_status {
  DIST_OK = 0,
  DIST_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad index or enum value */
  DIST_ERR_PARSE = 2,            /* malformed JSON or unreadable file */
  DIST_ERR_DOMAIN = 3,           /* input violates a mathematical precondition */
  DIST_ERR_INTERNAL = 4
} dist_status;

typedef struct dist_election dist_election;
typedef struct dist_metric dist_metric;
typedef struct dist_result dist_result;
typedef struct dist_adversary dist_adversary;

DIST_API const char* dist_version(void);
/* Message for the last failure on this thread; empty after a success. */
DIST_API const char* dist_last_error(void);
DIST_API void dist_string_free(char* s);

/* Elections. rankings is row-major, types x m. */
DIST_API dist_status dist_election_create(int m, size_t types, const int* rankings,
                                          const double* weights, dist_election** out);
DIST_API dist_status dist_election_from_json(const char* json, dist_election** out);
DIST_API dist_status dist_election_load(const char* path, dist_election** out);
DIST_API void dist_election_free(dist_election* election);
DIST_API int dist_election_candidates(const dist_election* election);
DIST_API size_t dist_election_types(const dist_election* election);
DIST_API dist_status dist_election_to_json(const dist_election* election, char** out);
/* out receives m*m entries, row i column j = share preferring i to j. */
DIST_API dist_status dist_election_comparisons(const dist_election* election, double* out);
DIST_API dist_status dist_election_plurality(const dist_election* election, double* out);

/* Metrics over an election's ranking types. */
DIST_API dist_status dist_metric_0123(const dist_election* election, int candidate,
                                      dist_metric** out);
DIST_API dist_status dist_metric_13(const dist_election* election, int candidate,
                                    dist_metric** out);
/* x has one entry per candidate. */
DIST_API dist_status dist_metric_biased(const dist_election* election, const double* x,
                                        dist_metric** out);
DIST_API dist_status dist_metric_generalized(const dist_election* election, const int* coalition,
                                             size_t size, dist_metric** out);
DIST_API dist_status dist_metric_from_json(const dist_election* election, const char* json,
                                           dist_metric** out);
DIST_API dist_status dist_metric_load(const dist_election* election, const char* path,
                                      dist_metric** out);
DIST_API void dist_metric_free(dist_metric* metric);
/* digits <= 0 writes full precision. */
DIST_API dist_status dist_metric_to_json(const dist_metric* metric, int digits, char** out);
/* report may be null; otherwise receives the validation report as JSON. */
DIST_API dist_status dist_metric_validate(const dist_metric* metric, int* ok, char** report);
DIST_API dist_status dist_metric_social_cost(const dist_metric* metric, int candidate,
                                             double* out);
DIST_API dist_status dist_metric_distortion(const dist_metric* metric, const double* lottery,
                                            double* out);

/* Mechanisms. */
typedef enum dist_mechanism {
  DIST_MECHANISM_LP_A = 0, /* over the (0,1,2,3)-metrics unless metrics are supplied */
  DIST_MECHANISM_LP_B = 1,
  DIST_MECHANISM_LP_C = 2,
  DIST_MECHANISM_SMART = 3,
  DIST_MECHANISM_RANDOM = 4,
  DIST_MECHANISM_OPTIMAL3 = 5
} dist_mechanism;

/* Accepts lpA, lpB, lpC, smart, random, optimal3. */
DIST_API dist_status dist_mechanism_parse(const char* name, dist_mechanism* out);
DIST_API dist_status dist_run_mechanism(const dist_election* election, dist_mechanism mechanism,
                                        dist_result** out);
DIST_API dist_status dist_run_lp_a(const dist_election* election,
                                   const dist_metric* const* metrics, size_t count,
                                   dist_result** out);
DIST_API void dist_result_free(dist_result* result);
DIST_API int dist_result_has_beta(const dist_result* result);
/* +inf when the LP is unbounded; NaN when absent. */
DIST_API double dist_result_beta(const dist_result* result);
DIST_API double dist_result_guarantee(const dist_result* result);
DIST_API dist_status dist_result_lottery(const dist_result* result, double* out);
DIST_API dist_status dist_result_to_json(const dist_result* result, char** out);

/* Worst case of a lottery over all consistent metrics. */
DIST_API dist_status dist_worst_case(const dist_election* election, const double* lottery,
                                     dist_adversary** out);
DIST_API void dist_adversary_free(dist_adversary* adversary);
DIST_API double dist_adversary_distortion(const dist_adversary* adversary);
DIST_API int dist_adversary_reference(const dist_adversary* adversary);
/* DIST_ERR_DOMAIN when the distortion is unbounded and no witness exists. */
DIST_API dist_status dist_adversary_witness(const dist_adversary* adversary, dist_metric** out);
DIST_API dist_status dist_adversary_to_json(const dist_adversary* adversary, char** out);

/* Lower-bound family. k = m - 3; c is ignored when has_c is 0. */
typedef struct dist_bound_params {
  double a;
  double b;
  double c;
  int has_c;
  int k;
} dist_bound_params;

typedef struct dist_bound_row {
  int m; /* 0 for the m -> infinity row */
  double a;
  double b;
  double c;
  int has_c;
  double beta;
  double distortion_lb;
} dist_bound_row;

/* DIST_ERR_DOMAIN with the violated condition when inadmissible. */
DIST_API dist_status dist_bound_check(const dist_bound_params* params);
DIST_API dist_status dist_bound_beta(const dist_bound_params* params, double* out);
DIST_API dist_status dist_bound_beta_limit(double a, double b, double c, double* out);
/* out receives k + 3 entries. */
DIST_API dist_status dist_bound_column_sums(const dist_bound_params* params, double* out);
/* m = 0 optimizes the limit. */
DIST_API dist_status dist_bound_optimize(int m, dist_bound_row* out);
DIST_API size_t dist_bound_published_count(void);
DIST_API dist_status dist_bound_published(size_t index, dist_bound_row* out);
DIST_API dist_status dist_bound_rows_csv(const dist_bound_row* rows, size_t count, char** out);
DIST_API dist_status dist_bound_row_to_json(const dist_bound_row* row, char** out);
DIST_API dist_status dist_lower_bound_election(int m, const dist_bound_params* params,
                                               dist_election** out);

typedef enum dist_case { DIST_CASE_I = 0, DIST_CASE_II = 1, DIST_CASE_III = 2 } dist_case;

DIST_API dist_status dist_case_objective(dist_case which, double x, double y, double z,
                                         double* out);
/* point receives (x, y, z). */
DIST_API dist_status dist_minimize_case(dist_case which, double* point, double* value);

/* out receives y_star, objective_lb, distortion_ub, improved_objective_lb,
 * improved_distortion_ub. */
DIST_API dist_status dist_ub_constants(double* out);

#ifdef __cplusplus
}
#endif

#endif /* DISTORTION_DISTORTION_H_ */
