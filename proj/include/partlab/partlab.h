/*
 * Copyright 2026 The partlab Authors
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

#ifndef PARTLAB_PARTLAB_H
#define PARTLAB_PARTLAB_H

/*
 * C interface to partlab: exact enumerators for distinct, consecutive and
 * almost consecutive partitions, and range checks of the identities relating
 * them to divisor functions and q-series.
 *
 * All handles are opaque. Functions return a partlab_status; on failure a
 * message for the calling thread is available from partlab_last_error().
 * A context may be shared between threads once its cache has been loaded;
 * reports are owned by the caller and released with partlab_report_destroy.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARTLAB_BUILDING)
#    define PARTLAB_API __declspec(dllexport)
#  else
#    define PARTLAB_API __declspec(dllimport)
#  endif
#else
#  define PARTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0..3 double as the CLI exit codes. */
typedef enum partlab_status {
  PARTLAB_OK = 0,
  PARTLAB_CHECK_FAILED = 1,
  PARTLAB_INVALID_ARGUMENT = 2,
  PARTLAB_RESOURCE_EXHAUSTED = 3,
  PARTLAB_DOMAIN_ERROR = 4,
  PARTLAB_IO_ERROR = 5,
  PARTLAB_INTERNAL_ERROR = 6
} partlab_status;

typedef enum partlab_format {
  PARTLAB_FORMAT_TEXT = 0,
  PARTLAB_FORMAT_CSV = 1,
  PARTLAB_FORMAT_JSON = 2
} partlab_format;

/* Which right-hand side is canonical for records carrying both the printed
 * formula ("paper") and the re-derived one ("derived"). */
typedef enum partlab_variant {
  PARTLAB_VARIANT_DERIVED = 0,
  PARTLAB_VARIANT_PAPER = 1
} partlab_variant;

typedef struct partlab_run_options {
  uint64_t from;  /* ignored unless has_from is non-zero */
  int has_from;
  uint64_t to;
  partlab_format format;
  unsigned jobs;  /* worker threads; 0 is treated as 1 */
  partlab_variant variant;
  uint64_t seed;
} partlab_run_options;

typedef struct partlab_divisor_stats {
  uint64_t n;
  uint64_t d;
  uint64_t sigma;
  uint64_t odd_part;
  uint64_t count_below; /* odd divisors d of n with d*d < 2n */
  uint64_t count_above; /* odd divisors d of n with d*d > 2n */
} partlab_divisor_stats;

typedef struct partlab_context partlab_context;
typedef struct partlab_report partlab_report;

PARTLAB_API const char* partlab_version(void);
PARTLAB_API const char* partlab_last_error(void);
PARTLAB_API void partlab_run_options_init(partlab_run_options* opts);

PARTLAB_API partlab_status partlab_context_create(partlab_context** out);
PARTLAB_API void partlab_context_destroy(partlab_context* ctx);

/* Table cache: "# partlab pd v1" then "n value" lines. Loading a missing
 * file is an IO error; callers that treat the cache as optional check first. */
PARTLAB_API partlab_status partlab_context_load_cache(partlab_context* ctx,
                                                      const char* path);
PARTLAB_API partlab_status partlab_context_save_cache(partlab_context* ctx,
                                                      const char* path);
/* Highest n for which p_d(n) is held in memory (0 if none). */
PARTLAB_API uint64_t partlab_context_cached_order(const partlab_context* ctx);

/* Commands. Each fills *out with a report even when checks fail; verify
 * returns PARTLAB_CHECK_FAILED if any record failed. */
PARTLAB_API partlab_status partlab_verify(partlab_context* ctx, const char* selector,
                                          const partlab_run_options* opts,
                                          partlab_report** out);
PARTLAB_API partlab_status partlab_sequence(partlab_context* ctx, const char* selector,
                                            const partlab_run_options* opts,
                                            partlab_report** out);
PARTLAB_API partlab_status partlab_enumerate(partlab_context* ctx, const char* selector,
                                             const partlab_run_options* opts,
                                             partlab_report** out);
PARTLAB_API partlab_status partlab_generating_function(partlab_context* ctx,
                                                       const char* selector,
                                                       const partlab_run_options* opts,
                                                       partlab_report** out);
PARTLAB_API partlab_status partlab_asymptotic(partlab_context* ctx,
                                              const partlab_run_options* opts,
                                              partlab_report** out);

PARTLAB_API size_t partlab_report_line_count(const partlab_report* report);
PARTLAB_API const char* partlab_report_line(const partlab_report* report, size_t i);
PARTLAB_API uint64_t partlab_report_passed(const partlab_report* report);
PARTLAB_API uint64_t partlab_report_failed(const partlab_report* report);
PARTLAB_API void partlab_report_destroy(partlab_report* report);

/* Small direct queries. */
PARTLAB_API partlab_status partlab_divisor_stats_get(uint64_t n,
                                                     partlab_divisor_stats* out);
PARTLAB_API int partlab_pentagonal_h(int64_t n);
PARTLAB_API partlab_status partlab_classify(const uint32_t* parts, size_t count,
                                            int* consecutive, int* almost_consecutive);
/* Writes p_d(n) in decimal, NUL-terminated. PARTLAB_RESOURCE_EXHAUSTED if buf
 * is too small; *needed (if non-null) receives the required size. */
PARTLAB_API partlab_status partlab_distinct_count(partlab_context* ctx, uint64_t n,
                                                  char* buf, size_t buf_len,
                                                  size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* PARTLAB_PARTLAB_H */
