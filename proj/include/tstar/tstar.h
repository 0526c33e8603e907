/*
 * tstar - exact sign covariance t* (U and V statistics) in O(n^2 log n).
 *
 * C interface over the C++ core. Objects are opaque handles created by
 * *_create / *_load / *_run functions and released with the matching
 * *_destroy. Every fallible call returns a tstar_status; on failure the
 * message for the calling thread is available from tstar_last_error().
 */
#ifndef TSTAR_TSTAR_H
#define TSTAR_TSTAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSTAR_BUILDING_LIBRARY)
#    define TSTAR_API __declspec(dllexport)
#  else
#    define TSTAR_API __declspec(dllimport)
#  endif
#else
#  define TSTAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tstar_status {
  TSTAR_OK = 0,
  TSTAR_ERR_INVALID_ARGUMENT = 1,
  TSTAR_ERR_SIZE = 2,       /* too few observations for the statistic */
  TSTAR_ERR_NON_FINITE = 3, /* NaN or infinite coordinate */
  TSTAR_ERR_IO = 4,
  TSTAR_ERR_PARSE = 5,
  TSTAR_ERR_OVERFLOW = 6,   /* value does not fit the requested type */
  TSTAR_ERR_LIMIT = 7,      /* naive method above its size cap */
  TSTAR_ERR_ROUTE = 8,      /* algorithm precondition not met by the data */
  TSTAR_ERR_INTERNAL = 9
} tstar_status;

typedef enum tstar_kind { TSTAR_KIND_U = 0, TSTAR_KIND_V = 1 } tstar_kind;

/* AUTO: untied algorithm when the data has no ties (U only), otherwise the
 * general algorithm. FAST: always the general algorithm. NAIVE: O(n^4). */
typedef enum tstar_method {
  TSTAR_METHOD_AUTO = 0,
  TSTAR_METHOD_FAST = 1,
  TSTAR_METHOD_NAIVE = 2
} tstar_method;

typedef enum tstar_path {
  TSTAR_PATH_UNTIED = 0,
  TSTAR_PATH_GENERAL = 1,
  TSTAR_PATH_GENERAL_V = 2,
  TSTAR_PATH_NAIVE_U = 3,
  TSTAR_PATH_NAIVE_V = 4
} tstar_path;

/* Exact integer components of a result. value = NUMERATOR / DENOMINATOR and
 * NUMERATOR = CONCORDANT_WEIGHTED - DISCORDANT_WEIGHTED. */
typedef enum tstar_field {
  TSTAR_FIELD_CONCORDANT_WEIGHTED = 0,
  TSTAR_FIELD_DISCORDANT_WEIGHTED = 1,
  TSTAR_FIELD_NUMERATOR = 2,
  TSTAR_FIELD_DENOMINATOR = 3
} tstar_field;

typedef enum tstar_bench_method {
  TSTAR_BENCH_FAST = 0,
  TSTAR_BENCH_NAIVE = 1
} tstar_bench_method;

typedef struct tstar_sample tstar_sample;
typedef struct tstar_result tstar_result;
typedef struct tstar_bench_report tstar_bench_report;
typedef struct tstar_relvar_table tstar_relvar_table;

typedef struct tstar_subsample_estimate {
  double mean;
  double variance;      /* unbiased; valid only when has_variance != 0 */
  int has_variance;     /* 0 when resamples == 1 */
  size_t m;
  size_t resamples;
  uint64_t seed;
  tstar_kind kind;
} tstar_subsample_estimate;

typedef struct tstar_bench_row {
  size_t n;
  tstar_bench_method method;
  double mean_seconds;
  size_t trials;
} tstar_bench_row;

TSTAR_API const char* tstar_version(void);
TSTAR_API const char* tstar_status_string(tstar_status status);
/* Message of the last failed call on this thread; "" if none. */
TSTAR_API const char* tstar_last_error(void);

TSTAR_API const char* tstar_kind_name(tstar_kind kind);
TSTAR_API const char* tstar_path_name(tstar_path path);

/* Samples ----------------------------------------------------------------- */

TSTAR_API tstar_status tstar_sample_create(const double* x, const double* y, size_t n,
                                           tstar_sample** out);
/* Delimited text file, see the README for the format. rank_transform != 0
 * replaces each column by midranks. */
TSTAR_API tstar_status tstar_sample_load(const char* path, int rank_transform,
                                         tstar_sample** out);
TSTAR_API tstar_status tstar_sample_parse(const char* text, size_t length,
                                          int rank_transform, tstar_sample** out);
TSTAR_API void tstar_sample_destroy(tstar_sample* sample);
TSTAR_API size_t tstar_sample_size(const tstar_sample* sample);
TSTAR_API int tstar_sample_ties_x(const tstar_sample* sample);
TSTAR_API int tstar_sample_ties_y(const tstar_sample* sample);

/* Exact statistic --------------------------------------------------------- */

TSTAR_API tstar_status tstar_compute(const tstar_sample* sample, tstar_kind kind,
                                     tstar_method method, tstar_result** out);
TSTAR_API void tstar_result_destroy(tstar_result* result);
TSTAR_API double tstar_result_value(const tstar_result* result);
TSTAR_API tstar_kind tstar_result_kind(const tstar_result* result);
TSTAR_API tstar_path tstar_result_path(const tstar_result* result);
TSTAR_API size_t tstar_result_n(const tstar_result* result);
/* TSTAR_ERR_OVERFLOW if the field exceeds int64 range (n beyond ~55000). */
TSTAR_API tstar_status tstar_result_field_i64(const tstar_result* result,
                                              tstar_field field, int64_t* out);
/* Base-10 text of the field; always exact. Needs capacity >= 42. */
TSTAR_API tstar_status tstar_result_field_decimal(const tstar_result* result,
                                                  tstar_field field, char* buffer,
                                                  size_t capacity);

/* Subsampling ------------------------------------------------------------- */

TSTAR_API tstar_status tstar_subsample(const tstar_sample* sample, size_t m,
                                       size_t resamples, uint64_t seed,
                                       tstar_kind kind, tstar_subsample_estimate* out);

/* relative variance of the subsampling estimator, one cell per (m, R) */
TSTAR_API tstar_status tstar_relvar_study(size_t n, const size_t* subset_sizes,
                                          size_t subset_count,
                                          const size_t* resample_counts,
                                          size_t resample_count, size_t trials,
                                          uint64_t seed, tstar_relvar_table** out);
TSTAR_API void tstar_relvar_destroy(tstar_relvar_table* table);
TSTAR_API double tstar_relvar_exact_variance(const tstar_relvar_table* table);
TSTAR_API tstar_status tstar_relvar_cell(const tstar_relvar_table* table, size_t subset_index,
                                         size_t resample_index, double* out);

/* Benchmark --------------------------------------------------------------- */

TSTAR_API tstar_status tstar_bench_run(const size_t* sizes, size_t size_count,
                                       const tstar_bench_method* methods,
                                       size_t method_count, size_t trials, uint64_t seed,
                                       int allow_large_naive, tstar_bench_report** out);
TSTAR_API void tstar_bench_destroy(tstar_bench_report* report);
TSTAR_API size_t tstar_bench_row_count(const tstar_bench_report* report);
TSTAR_API tstar_status tstar_bench_row_at(const tstar_bench_report* report, size_t index,
                                          tstar_bench_row* out);

#ifdef __cplusplus
}
#endif

#endif /* TSTAR_TSTAR_H */
