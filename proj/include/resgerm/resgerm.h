/* Copyright 2026 The resgerm Authors
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef RESGERM_RESGERM_H
#define RESGERM_RESGERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(RESGERM_BUILDING_LIBRARY)
#define RG_API __attribute__((visibility("default")))
#else
#define RG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum rg_status {
  RG_OK = 0,
  RG_ERROR_IO = 1,
  RG_ERROR_VALIDATION = 2,
  RG_ERROR_STRUCTURE = 3,     /* Dicritical shadow or DecompositionFailure */
  RG_ERROR_SMALL_DIVISOR = 4,
  RG_ERROR_DOMAIN = 5,        /* degenerate, not characteristic, infinite order, ... */
  RG_ERROR_INVALID_ARGUMENT = 6
} rg_status;

typedef struct rg_germ rg_germ;

typedef struct rg_analysis_options {
  int degree_bound;          /* default 16 */
  double small_divisor_tol;  /* default 1e-12 */
  double mu_tol;             /* default 1e-9 */
  int order;                 /* normalization order; 0 = truncation order */
} rg_analysis_options;

typedef struct rg_probe_options {
  size_t direction;
  double beta;
  double theta;
  double tau;
  double smax;
  long samples;
  long max_iter;
  double eps_converge;
  double r_escape;
  uint64_t seed;
  int stride;
  int threads;         /* 0 = hardware concurrency; never affects results */
  long trace_samples;
  const char* trace_dir; /* NULL = no CSV traces */
} rg_probe_options;

RG_API const char* rg_version(void);
RG_API const char* rg_status_string(rg_status status);
/* Message of the last failing call on this thread ("" if none). */
RG_API const char* rg_last_error_message(void);
/* Frees strings returned through char** out-parameters. */
RG_API void rg_string_free(char* s);

RG_API rg_status rg_germ_parse(const char* json, rg_germ** out);
RG_API rg_status rg_germ_load(const char* path, rg_germ** out);
RG_API void rg_germ_free(rg_germ* germ);
RG_API rg_status rg_germ_dimension(const rg_germ* germ, size_t* n);
RG_API rg_status rg_germ_to_json(const rg_germ* germ, char** out);
/* JSON array of parse warnings (for instance reduced turns). */
RG_API rg_status rg_germ_warnings_json(const rg_germ* germ, char** out);
/* z and out hold n complex numbers as interleaved (re, im) pairs. */
RG_API rg_status rg_germ_evaluate(const rg_germ* germ, const double* z, double* out);

RG_API void rg_analysis_options_default(rg_analysis_options* options);
RG_API void rg_probe_options_default(rg_probe_options* options);

/* Reports are JSON documents; free them with rg_string_free. */
RG_API rg_status rg_analyze(const rg_germ* germ, const rg_analysis_options* options, char** report);
RG_API rg_status rg_classify(const rg_germ* germ, const rg_analysis_options* options, char** report);
RG_API rg_status rg_check(const rg_germ* germ, const rg_analysis_options* options, char** report);
RG_API rg_status rg_normalize(const rg_germ* germ, const rg_analysis_options* options, char** report);
RG_API rg_status rg_probe(const rg_germ* germ, const rg_analysis_options* options,
                          const rg_probe_options* probe, char** report);

#ifdef __cplusplus
}
#endif

#endif /* RESGERM_RESGERM_H */
