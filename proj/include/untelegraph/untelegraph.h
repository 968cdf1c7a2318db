/* Copyright 2026 The untelegraph Authors
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

/* C interface to libuntelegraph.
 *
 * Every fallible call returns a ut_status. On failure the message is kept in
 * thread-local storage and can be read with ut_last_error() until the next
 * failing call on the same thread. Objects are opaque handles released with
 * the matching *_free function; passing NULL to *_free is a no-op.
 *
 * Strings are written into caller buffers: `len` is the buffer size, and
 * `needed` (optional) receives strlen + 1. A short buffer yields UT_ERR_BUFFER.
 */

#ifndef UNTELEGRAPH_UNTELEGRAPH_H_
#define UNTELEGRAPH_UNTELEGRAPH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(UT_BUILDING_LIBRARY)
#define UT_API __attribute__((visibility("default")))
#else
#define UT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ut_status {
  UT_OK = 0,
  UT_ERR_PARAMETER = 1,
  UT_ERR_CAPACITY = 2,
  UT_ERR_UNSUPPORTED = 3,
  UT_ERR_PRECONDITION = 4,
  UT_ERR_SINGULAR = 5,
  UT_ERR_BUFFER = 6,
  UT_ERR_INTERNAL = 7
} ut_status;

UT_API const char* ut_last_error(void);
UT_API const char* ut_status_name(ut_status status);
UT_API const char* ut_version(void);

/* ---- keys ---------------------------------------------------------------- */

typedef struct ut_unitary ut_unitary;

/* Haar key drawn from the stream (seed, stream). */
UT_API ut_status ut_unitary_sample_haar(size_t dim, uint64_t seed, uint64_t stream,
                                        ut_unitary** out);
UT_API void ut_unitary_free(ut_unitary* u);
UT_API size_t ut_unitary_dim(const ut_unitary* u);
UT_API ut_status ut_unitary_entry(const ut_unitary* u, size_t row, size_t col, double* re,
                                  double* im);
/* Frobenius norm of U^dagger U - I. */
UT_API ut_status ut_unitary_defect(const ut_unitary* u, double* out);

/* ---- scheme -------------------------------------------------------------- */

typedef struct ut_scheme ut_scheme;

/* r >= 1 (rank), n >= 2 (messages); dimension r*n. */
UT_API ut_status ut_scheme_create(size_t r, size_t n, ut_scheme** out);
UT_API void ut_scheme_free(ut_scheme* s);
UT_API size_t ut_scheme_rank(const ut_scheme* s);
UT_API size_t ut_scheme_messages(const ut_scheme* s);
UT_API size_t ut_scheme_dim(const ut_scheme* s);
/* Encrypts `message` under `key` and writes the n decryption probabilities. */
UT_API ut_status ut_scheme_roundtrip(const ut_scheme* s, const ut_unitary* key, size_t message,
                                     double* probabilities, size_t len);
/* Largest 1 - P(correct message) over sampled (message, key) pairs. */
UT_API ut_status ut_scheme_correctness(const ut_scheme* s, size_t samples, uint64_t seed,
                                       double* out);

/* ---- attacks and estimation ---------------------------------------------- */

typedef enum ut_attack_kind {
  UT_ATTACK_BIT_SINGLE = 0,
  UT_ATTACK_BIT_MAJORITY = 1,
  UT_ATTACK_MULTI_ARGMAX = 2,
  UT_ATTACK_DISTINGUISH = 3,
  UT_ATTACK_GENERIC_POVM = 4
} ut_attack_kind;

UT_API ut_status ut_attack_kind_parse(const char* name, ut_attack_kind* out);
UT_API const char* ut_attack_kind_name(ut_attack_kind kind);

typedef struct ut_attack_spec {
  ut_attack_kind kind;
  size_t r;
  size_t n;
  size_t t;             /* copies, bit-majority only */
  size_t m0;            /* distinguish only */
  size_t m1;
  size_t povm_outcomes; /* generic-povm: 0 = computational basis, else random POVM */
  uint64_t povm_seed;
} ut_attack_spec;

/* kind bit-single, r = 1, n = 2, t = 1, m0 = 0, m1 = 1. */
UT_API ut_attack_spec ut_attack_spec_default(void);
UT_API ut_status ut_attack_validate(const ut_attack_spec* spec);
UT_API ut_status ut_attack_describe(const ut_attack_spec* spec, char* buf, size_t len,
                                    size_t* needed);
/* Success probability for one fixed key. */
UT_API ut_status ut_attack_success(const ut_attack_spec* spec, const ut_unitary* key,
                                   double* out);

typedef struct ut_value_estimate {
  double mean;
  double std_error;
  uint64_t samples;
  uint64_t seed;
} ut_value_estimate;

/* chunk_size 0 selects the default; threads 0 selects hardware concurrency.
 * The result does not depend on `threads`. */
UT_API ut_status ut_estimate(const ut_attack_spec* spec, uint64_t samples, uint64_t seed,
                             size_t chunk_size, unsigned threads, ut_value_estimate* out);
UT_API ut_status ut_confidence_interval(const ut_value_estimate* est, double z, double* lo,
                                        double* hi);

/* ---- closed forms -------------------------------------------------------- */

typedef struct ut_clamped {
  double value; /* min(1, raw) */
  double raw;
  int vacuous;  /* raw >= 1 */
} ut_clamped;

/* 1/2 + C(2r, r) / 2^(2r+1). `rational` may be NULL. */
UT_API ut_status ut_bit_exact_value(size_t r, double* value, char* rational, size_t len,
                                    size_t* needed);
UT_API ut_status ut_distinguish_exact_value(size_t r, double* value, char* rational, size_t len,
                                            size_t* needed);
UT_API ut_status ut_bit_asymptotic_brackets(size_t d, double* lower, double* asymptote,
                                            double* upper);
UT_API ut_status ut_majority_exact_value(double p, size_t t, double* out);
UT_API ut_status ut_majority_brackets(double delta, size_t t, double* lower, double* upper);
UT_API ut_status ut_multimessage_series(size_t r, size_t n, double tol, double* value,
                                        double* tail_bound, size_t* shells);
UT_API ut_status ut_telegraphing_lower_from_distinguish(size_t r, size_t n, double* value,
                                                        double* asymptotic);
UT_API ut_status ut_ute_upper_bound_bit(size_t d, double* out);
UT_API ut_status ut_ute_upper_bound_tcopy(size_t r, size_t t, ut_clamped* out);
UT_API ut_status ut_collusion_upper_bound(size_t r, size_t q, size_t n, ut_clamped* out);

typedef enum ut_log_base { UT_LOG_BINARY = 0, UT_LOG_NATURAL = 1 } ut_log_base;

UT_API ut_status ut_equivalence_gap(size_t d, size_t n_messages, uint64_t receivers, double eta,
                                    ut_log_base base, double* out);
UT_API ut_status ut_min_receivers_for_gap(size_t d, size_t n_messages, double eta, double target,
                                          ut_log_base base, uint64_t* out);
UT_API ut_status ut_general_lower_bounds(size_t d, size_t m, size_t n_messages, size_t t,
                                         double* telegraphing, double* cloning_1_to_2,
                                         double* cloning_t_to_t1);
UT_API ut_status ut_haar_tcopy_brackets(size_t r, size_t t, double* lower, ut_clamped* upper);
UT_API ut_status ut_regularized_incomplete_beta(double x, double a, double b, double* out);

/* ---- Weingarten calculus and certification ------------------------------- */

typedef struct ut_weingarten ut_weingarten;

/* 1 <= k <= 6, d >= k. */
UT_API ut_status ut_weingarten_create(size_t k, size_t d, ut_weingarten** out);
UT_API void ut_weingarten_free(ut_weingarten* w);
UT_API size_t ut_weingarten_order(const ut_weingarten* w);
/* Wg(perm, d); perm[j] is the image of j. */
UT_API ut_status ut_weingarten_value(const ut_weingarten* w, const int* perm, size_t k,
                                     double* out);
UT_API ut_status ut_weingarten_residual(const ut_weingarten* w, double* out);
/* Exact twirl of a dense d^k x d^k row-major operator; writes k! coefficients over
 * permutations in lexicographic order. */
UT_API ut_status ut_exact_twirl_coefficients(const ut_weingarten* w, const double* x_re,
                                             const double* x_im, size_t dim, double* coeff_re,
                                             double* coeff_im, size_t n_coeff);

typedef struct ut_second_moment_report {
  size_t d;
  double c_identity;
  double c_flip;
  double expected_identity;
  double expected_flip;
  double max_entry_deviation;
  int pass;
} ut_second_moment_report;

UT_API ut_status ut_second_moment_check(size_t d, double tolerance,
                                        ut_second_moment_report* out);

typedef struct ut_bracket_report {
  size_t k;
  size_t d;
  size_t trials;
  uint64_t seed;
  double upper_gap_min; /* over trials */
  double lower_gap_min;
  double min_eigenvalue;
  int pass;
  int has_cp;           /* the fields below are set only when has_cp != 0 */
  double cp_upper_min;
  double cp_lower_min;
  int cp_pass;
} ut_bracket_report;

UT_API ut_status ut_lemma_bracket_check(size_t k, size_t d, size_t trials, uint64_t seed,
                                        double tolerance, ut_bracket_report* out);

typedef enum ut_choi_route { UT_CHOI_GROUP_ALGEBRA = 0, UT_CHOI_DENSE = 1 } ut_choi_route;

UT_API ut_status ut_choi_bracket(size_t k, size_t d, ut_choi_route route, double* upper_min,
                                 double* lower_min);

typedef struct ut_moment_report ut_moment_report;

/* parts[i] copies of message i's ciphertext; sum(parts)^2 <= r. */
UT_API ut_status ut_moment_deviation_check(size_t r, size_t n, const size_t* parts,
                                           size_t n_parts, size_t random_trials, uint64_t seed,
                                           ut_moment_report** out);
UT_API void ut_moment_report_free(ut_moment_report* report);
UT_API ut_status ut_moment_report_summary(const ut_moment_report* report, size_t* k,
                                          double* bound_factor, double* max_ratio, int* pass,
                                          size_t* n_probes);
/* `label` stays valid for the lifetime of the report. */
UT_API ut_status ut_moment_report_probe(const ut_moment_report* report, size_t i,
                                        const char** label, double* trace_p, double* haar_value,
                                        double* deviation, double* ratio, int* within_bound);

#ifdef __cplusplus
}
#endif

#endif /* UNTELEGRAPH_UNTELEGRAPH_H_ */
