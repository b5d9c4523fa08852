// Copyright 2026 The majsep Authors
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

/* C interface to the majsep separability toolkit.
 *
 * Objects are opaque handles created by majsep_*_create-style calls and
 * released with the matching *_destroy. Every fallible call returns a
 * majsep_status; on failure majsep_last_error() describes the cause for the
 * calling thread until its next failing call. Array getters take a capacity
 * and report the required length so callers can size buffers with a first
 * call passing NULL / 0.
 */

#ifndef MAJSEP_H
#define MAJSEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAJSEP_BUILDING)
#    define MAJSEP_API __declspec(dllexport)
#  else
#    define MAJSEP_API __declspec(dllimport)
#  endif
#else
#  define MAJSEP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum majsep_status {
  MAJSEP_OK = 0,
  MAJSEP_ERR_BAD_PARAMETER = 1,
  MAJSEP_ERR_NOT_HERMITIAN = 2,
  MAJSEP_ERR_NO_CONVERGENCE = 3,
  MAJSEP_ERR_INVALID_STATE = 4,
  MAJSEP_ERR_BAD_PARTITION = 5,
  MAJSEP_ERR_SUM_MISMATCH = 6,
  MAJSEP_ERR_NOT_MAJORIZED = 7,
  MAJSEP_ERR_DEGENERATE_INPUT = 8,
  MAJSEP_ERR_TOO_LARGE = 9,
  MAJSEP_ERR_PARSE = 10,
  MAJSEP_ERR_IO = 11,
  MAJSEP_ERR_SELF_CHECK = 12,
  MAJSEP_ERR_NULL_ARGUMENT = 13,
  MAJSEP_ERR_BUFFER_TOO_SMALL = 14,
  MAJSEP_ERR_OUT_OF_RANGE = 15,
  MAJSEP_ERR_INTERNAL = 16
} majsep_status;

typedef enum majsep_verdict {
  MAJSEP_PROVEN_INSEPARABLE = 0,
  MAJSEP_CONSISTENT_WITH_SEPARABILITY = 1
} majsep_verdict;

typedef enum majsep_side { MAJSEP_SIDE_A = 0, MAJSEP_SIDE_B = 1 } majsep_side;

typedef enum majsep_spectrum_kind {
  MAJSEP_SPECTRUM_GLOBAL = 0,
  MAJSEP_SPECTRUM_A = 1,
  MAJSEP_SPECTRUM_B = 2
} majsep_spectrum_kind;

typedef struct majsep_state majsep_state;
typedef struct majsep_report majsep_report;
typedef struct majsep_construction majsep_construction;
typedef struct majsep_search majsep_search;

MAJSEP_API const char* majsep_version(void);
MAJSEP_API const char* majsep_status_name(majsep_status status);
MAJSEP_API const char* majsep_last_error(void);
MAJSEP_API const char* majsep_verdict_name(majsep_verdict verdict);

/* ---- states ------------------------------------------------------------ */

/* dims[0..ndims) subsystem dimensions, split = number of A subsystems,
 * re/im row-major parts of the (prod dims)^2 entries. */
MAJSEP_API majsep_status majsep_state_create(const size_t* dims, size_t ndims,
                                             size_t split, const double* re,
                                             const double* im,
                                             majsep_state** out);
MAJSEP_API majsep_status majsep_state_parse(const char* text, majsep_state** out);
MAJSEP_API majsep_status majsep_state_load(const char* path, majsep_state** out);
MAJSEP_API majsep_status majsep_state_werner(size_t d, double p, majsep_state** out);
MAJSEP_API majsep_status majsep_state_cat(size_t n, size_t d, double eps,
                                          majsep_state** out);
MAJSEP_API majsep_status majsep_state_example1(double p, majsep_state** out);
MAJSEP_API majsep_status majsep_state_isospectral(majsep_state** rho,
                                                  majsep_state** sigma);
MAJSEP_API majsep_status majsep_state_random(size_t dim_a, size_t dim_b,
                                             size_t rank, uint64_t seed,
                                             majsep_state** out);
MAJSEP_API majsep_status majsep_state_random_separable(size_t dim_a, size_t dim_b,
                                                       size_t terms, uint64_t seed,
                                                       majsep_state** out);
MAJSEP_API void majsep_state_destroy(majsep_state* state);

MAJSEP_API size_t majsep_state_dim(const majsep_state* state);
/* Copies up to cap dims, writes the subsystem count to *ndims and the split. */
MAJSEP_API majsep_status majsep_state_dims(const majsep_state* state, size_t* dims,
                                           size_t cap, size_t* ndims, size_t* split);
/* dim*dim row-major entries into re and im (each of capacity cap). */
MAJSEP_API majsep_status majsep_state_entries(const majsep_state* state, double* re,
                                              double* im, size_t cap);
/* Matrix file text; *needed includes the terminating NUL. */
MAJSEP_API majsep_status majsep_state_format(const majsep_state* state, char* buf,
                                             size_t cap, size_t* needed);

/* ---- criteria ---------------------------------------------------------- */

typedef struct majsep_report_summary {
  majsep_verdict verdict;
  int majorization_a;      /* global spectrum majorized by A spectrum */
  int majorization_b;      /* global spectrum majorized by B spectrum */
  long first_violation_a;  /* zero-based prefix index or -1 */
  long first_violation_b;
  int entropy_ok;
  double entropy_a;  /* bits */
  double entropy_b;
  double entropy_ab;
  int ppt_ok;
  double ppt_min_eigenvalue;
} majsep_report_summary;

MAJSEP_API majsep_status majsep_analyze(const majsep_state* state, double tol,
                                        majsep_report** out);
MAJSEP_API void majsep_report_destroy(majsep_report* report);
MAJSEP_API majsep_status majsep_report_get_summary(const majsep_report* report,
                                                   majsep_report_summary* out);
MAJSEP_API majsep_status majsep_report_spectrum(const majsep_report* report,
                                                majsep_spectrum_kind kind,
                                                double* out, size_t cap,
                                                size_t* len);
MAJSEP_API majsep_status majsep_report_prefix_gaps(const majsep_report* report,
                                                   majsep_side side, double* out,
                                                   size_t cap, size_t* len);

/* Closed-form thresholds, each verified against a numerical bisection. */
MAJSEP_API majsep_status majsep_werner_threshold(size_t d, double* out);
MAJSEP_API majsep_status majsep_cat_threshold(size_t n, size_t d, double* out);
/* Bisected two-qubit Werner boundary of the entropy criterion. */
MAJSEP_API majsep_status majsep_werner_entropy_boundary(double* out);

/* ---- construction ------------------------------------------------------ */

MAJSEP_API majsep_status majsep_construct(const double* r, size_t nr,
                                          const double* s, size_t ns,
                                          majsep_construction** out);
/* Reads a spectra file ("r: ..." / "s: ..." or JSON) and constructs. */
MAJSEP_API majsep_status majsep_construct_from_file(const char* path,
                                                    majsep_construction** out);
MAJSEP_API void majsep_construction_destroy(majsep_construction* c);
/* Borrowed; valid until the construction is destroyed. */
MAJSEP_API const majsep_state* majsep_construction_state(const majsep_construction* c);
MAJSEP_API size_t majsep_construction_term_count(const majsep_construction* c);
/* Term i: weight, B basis index and the A vector (dim_a entries). */
MAJSEP_API majsep_status majsep_construction_term(const majsep_construction* c,
                                                  size_t i, double* weight,
                                                  size_t* b_index, double* a_re,
                                                  double* a_im, size_t cap,
                                                  size_t* dim_a);

MAJSEP_API majsep_status majsep_theorem3_global_spectrum(double q, double phi,
                                                         double out[2]);
/* *feasible = 0 when q(1-q) = (1+p)^2/8 has no root; roots otherwise. */
MAJSEP_API majsep_status majsep_theorem3_feasibility(double p, int* feasible,
                                                     double roots[2]);
MAJSEP_API majsep_status majsep_theorem3_onset(double* out);

/* ---- search ------------------------------------------------------------ */

typedef struct majsep_search_record {
  size_t index;
  uint64_t seed;
  size_t dim_a;
  size_t dim_b;
  size_t rank;
  double ppt_min_eig;
  double majorization_a_gap;
  double majorization_b_gap;
  int is_candidate;
  int is_near_miss;
} majsep_search_record;

/* rank 0 cycles ranks 1..dim_a*dim_b; threads 0 uses all cores. */
MAJSEP_API majsep_status majsep_search_run(size_t dim_a, size_t dim_b, size_t rank,
                                           size_t samples, uint64_t seed,
                                           unsigned threads, majsep_search** out);
MAJSEP_API void majsep_search_destroy(majsep_search* search);
MAJSEP_API size_t majsep_search_count(const majsep_search* search);
MAJSEP_API majsep_status majsep_search_record_at(const majsep_search* search,
                                                 size_t i,
                                                 majsep_search_record* out);
/* Recomputes one record from its seed. */
MAJSEP_API majsep_status majsep_search_evaluate(size_t dim_a, size_t dim_b,
                                                size_t rank, uint64_t seed,
                                                majsep_search_record* out);

#ifdef __cplusplus
}
#endif

#endif /* MAJSEP_H */
