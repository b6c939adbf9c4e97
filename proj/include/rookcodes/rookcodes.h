/*
 * Copyright 2026 The rookcodes Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to rookcodes.
 *
 * Every fallible call returns an rk_status; on failure a description is
 * available from rk_last_error() on the same thread until the next call.
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with rk_string_free.
 */
#ifndef ROOKCODES_H_
#define ROOKCODES_H_

#include <stddef.h>
#include <stdint.h>

#if defined(RK_BUILDING_LIBRARY)
#define RK_API __attribute__((visibility("default")))
#else
#define RK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERR_INVALID_ARGUMENT = 1,
  RK_ERR_DIMENSION_MISMATCH = 2,
  RK_ERR_SINGULAR_MATRIX = 3,
  RK_ERR_SINGULAR_AFTER_RETRY = 4,
  RK_ERR_NOT_ENOUGH_PRODUCTS = 5,
  RK_ERR_DUPLICATE_EVALUATION_POINT = 6,
  RK_ERR_POLE_EVALUATION = 7,
  RK_ERR_UNCOVERED_PAIR = 8,
  RK_ERR_PARAMETER_SEARCH_EXHAUSTED = 9,
  RK_ERR_SEARCH_BUDGET_EXCEEDED = 10,
  RK_ERR_CONFIG_INVALID = 11,
  RK_ERR_PARSE = 12,
  RK_ERR_IO = 13,
  RK_ERR_INTERNAL = 14
} rk_status;

/* "InvalidArgument", "SingularMatrix", ... ; "OK" for RK_OK. */
RK_API const char* rk_status_name(rk_status status);
RK_API const char* rk_last_error(void);
RK_API void rk_string_free(char* s);
RK_API const char* rk_version(void);

/* 2^61 - 1 */
RK_API uint64_t rk_default_modulus(void);

/* ---- Exponent pairs --------------------------------------------------- */

typedef struct rk_exponents rk_exponents;

/* construction: "poly", "base3" or "behrend" (the "rook-" prefix is also
 * accepted). */
RK_API rk_status rk_exponents_generate(const char* construction, uint64_t n,
                                       rk_exponents** out);
/* Explicit Behrend parameters: digits in [0, digit_bound), `length` digits. */
RK_API rk_status rk_exponents_behrend_with(uint64_t n, uint32_t digit_bound,
                                           uint32_t length, rk_exponents** out);
RK_API rk_status rk_exponents_from_arrays(const uint64_t* p, const uint64_t* q,
                                          size_t n, rk_exponents** out);
/* {"n":N,"p":[...],"q":[...]} */
RK_API rk_status rk_exponents_parse_json(const char* json, rk_exponents** out);
RK_API rk_status rk_exponents_to_json(const rk_exponents* e, char** out);
RK_API void rk_exponents_free(rk_exponents* e);

RK_API size_t rk_exponents_size(const rk_exponents* e);
/* Copies P and Q into caller buffers of rk_exponents_size() entries each;
 * either pointer may be NULL. */
RK_API rk_status rk_exponents_values(const rk_exponents* e, uint64_t* p,
                                     uint64_t* q);
RK_API uint64_t rk_exponents_max(const rk_exponents* e);
/* |P+Q|, the recovery threshold of the Rook code. */
RK_API uint64_t rk_exponents_sum_support_size(const rk_exponents* e);
RK_API int rk_exponents_is_decodable(const rk_exponents* e);
/* 1 or 0 when P == Q; -1 when the sets differ. */
RK_API int rk_exponents_is_3ap_free(const rk_exponents* e);
/* Multiplications spent by the gap-power step of the Horner encoder. */
RK_API uint64_t rk_exponents_gap_power_muls(const rk_exponents* e);

/* Exhaustive minimum of |P+Q| over decodable pairs containing 0 with
 * elements <= max_exponent (n <= 4, max_exponent <= 12). `witness` may be
 * NULL. */
RK_API rk_status rk_min_recovery(uint64_t n, uint64_t max_exponent,
                                 uint64_t* l_min, rk_exponents** witness);

/* ---- Scheme descriptors and thresholds ------------------------------- */

/* {"scheme":"rook-poly|rook-base3|rook-behrend|lcc|csa|replication",
 *  "n":N, "lambda":L?, "exponents":{...}?} */
RK_API rk_status rk_scheme_threshold(const char* descriptor_json,
                                     uint64_t* threshold);

/* ---- Coding sessions -------------------------------------------------- */

/* A scheme bound to a field, a worker count and a seed (which fixes the
 * evaluation points), plus the batch being multiplied. Shares, products and
 * results travel as JSON:
 *   inputs   {"a":[M...],"b":[M...]}
 *   share    {"worker":w,"x":"<dec>","a":M,"b":M}
 *   product  {"worker":w,"x":"<dec>","e":M}
 *   M        {"rows":r,"cols":c,"entries":["<dec>",...]}
 */
typedef struct rk_session rk_session;

/* workers == 0 picks threshold + 4 (replication: lambda * n). */
RK_API rk_status rk_session_create(const char* descriptor_json,
                                   uint64_t modulus, uint64_t workers,
                                   uint64_t seed, rk_session** out);
RK_API void rk_session_free(rk_session* s);
RK_API uint64_t rk_session_threshold(const rk_session* s);
RK_API uint64_t rk_session_workers(const rk_session* s);
RK_API rk_status rk_session_set_inputs(rk_session* s, const char* inputs_json);
/* Fills the session with uniformly random inputs of the given shape. */
RK_API rk_status rk_session_random_inputs(rk_session* s, uint64_t rows,
                                          uint64_t inner, uint64_t cols,
                                          uint64_t seed);
RK_API rk_status rk_session_encode(const rk_session* s, uint64_t worker,
                                   char** share_json);
/* products_json: a JSON array of products in arrival order. Writes a JSON
 * array of the n decoded matrices. */
RK_API rk_status rk_session_decode(const rk_session* s,
                                   const char* products_json,
                                   char** result_json);
/* A_i * B_i computed directly, as a JSON array of matrices. */
RK_API rk_status rk_session_direct_products(const rk_session* s,
                                            char** result_json);

/* The worker step: multiplies the two matrices of a share. */
RK_API rk_status rk_worker_compute(const char* share_json, uint64_t modulus,
                                   char** product_json);

/* ---- Simulation ------------------------------------------------------- */

typedef struct rk_sim_options {
  const char* scheme; /* as in descriptors; NULL means "rook-base3" */
  uint64_t n;
  uint64_t lambda;  /* replication factor */
  uint64_t workers; /* 0: threshold + 4 (replication: lambda * n) */
  uint64_t rows, inner, cols;
  uint64_t seed;
  int encode_at_workers; /* 0: master encodes, 1: workers encode */
  double fail_prob;
  double straggle_mean;
  double base_delay;
  uint64_t modulus;
  uint64_t threads;
  const uint64_t* forced_failures;
  size_t forced_failure_count;
} rk_sim_options;

RK_API void rk_sim_options_init(rk_sim_options* options);

typedef struct rk_sim_report rk_sim_report;

RK_API rk_status rk_simulate(const rk_sim_options* options,
                             rk_sim_report** out);
RK_API void rk_sim_report_free(rk_sim_report* r);
RK_API int rk_sim_report_success(const rk_sim_report* r);
RK_API int rk_sim_report_verified(const rk_sim_report* r);
RK_API uint64_t rk_sim_report_threshold(const rk_sim_report* r);
RK_API uint64_t rk_sim_report_responses_used(const rk_sim_report* r);
RK_API uint64_t rk_sim_report_responses_received(const rk_sim_report* r);
/* "" on success. Valid for the lifetime of the report. */
RK_API const char* rk_sim_report_error(const rk_sim_report* r);
RK_API rk_status rk_sim_report_to_json(const rk_sim_report* r, char** out);

/* CSV with columns scheme,n,trial,threshold,responses_used,encode_muls,
 * encode_invs,worker_muls,decode_time,success,verified. `schemes` holds
 * scheme names. */
RK_API rk_status rk_sweep_csv(const rk_sim_options* base,
                              const uint64_t* n_values, size_t n_count,
                              const char* const* schemes, size_t scheme_count,
                              uint64_t trials, char** csv);

/* CSV with columns n,delta_muls,ratio for Behrend exponents. */
RK_API rk_status rk_bench_delta_csv(const uint64_t* n_values, size_t n_count,
                                    char** csv);

#ifdef __cplusplus
}
#endif

#endif /* ROOKCODES_H_ */
