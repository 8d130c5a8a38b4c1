#ifndef WZWBLOCKS_H
#define WZWBLOCKS_H

/*
 * C interface to the wzwblocks engine: exact dimensions of spaces of
 * conformal blocks for rank-2 stable bundles on rational ruled surfaces.
 *
 * Conventions:
 *   - Every function returns a wzw_status; results travel through out
 *     parameters. Out parameters are written only on WZW_OK.
 *   - Integer results can exceed any fixed width, so they are returned as
 *     decimal strings allocated by the library. Release them with
 *     wzw_string_free(). Strings returned as `const char*` are owned by
 *     the library (or by the handle they were read from) and must not be
 *     freed.
 *   - wzw_last_error() returns a thread-local description of the most
 *     recent failure on the calling thread.
 *   - Handles (wzw_report, wzw_selfcheck) are opaque; release them with
 *     their matching _free function. All operations on distinct handles
 *     are safe to run concurrently.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wzw_status {
  WZW_OK = 0,
  WZW_ERR_INVALID = 1,   /* malformed argument: null out pointer, e < 0, ... */
  WZW_ERR_PARITY = 2,    /* Sigma.C is odd */
  WZW_ERR_STABILITY = 3, /* c outside the stability window c > max(-e/4, 0) */
  WZW_ERR_INTERNAL = 4   /* cross-check disagreement or other library bug */
} wzw_status;

typedef enum wzw_hint {
  WZW_HINT_YES = 0,
  WZW_HINT_NO = 1,
  WZW_HINT_UNKNOWN = 2
} wzw_hint;

const char* wzw_version(void);
const char* wzw_status_name(wzw_status status);
const char* wzw_last_error(void);
void wzw_string_free(char* s);

/* ---- Picard lattice of F_e --------------------------------------------- */

/* Intersection number (a1*Sigma + b1*f).(a2*Sigma + b2*f) on F_e. */
wzw_status wzw_intersect(int64_t e, int64_t a1, int64_t b1, int64_t a2, int64_t b2, char** out);

/* Canonical class K = ka*Sigma + kb*f. */
wzw_status wzw_canonical_class(int64_t e, char** ka, char** kb);

wzw_status wzw_adjunction_genus(int64_t e, int64_t a, int64_t b, char** out);

/* 1 iff Sigma.C is even. */
wzw_status wzw_parity_ok(int64_t e, int64_t a, int64_t b, int* out);

wzw_status wzw_smooth_member_hint(int64_t e, int64_t a, int64_t b, wzw_hint* out);

/* 1 iff c > max(-e/4, 0). */
wzw_status wzw_check_stability(int64_t e, int64_t c, int* out);

/* ---- Cohomology of O(a*Sigma + b*f) ------------------------------------ */

wzw_status wzw_cohomology_table(int64_t e, int64_t a, int64_t b, char** h0, char** h1, char** h2);

/* Riemann-Roch Euler characteristic chi(D) = 1 + D.(D-K)/2. */
wzw_status wzw_chi_rr(int64_t e, int64_t a, int64_t b, char** out);

/* ---- Conformal-block pipeline ------------------------------------------ */

typedef struct wzw_report wzw_report;

typedef enum wzw_report_field {
  WZW_FIELD_GENUS = 0,    /* adjunction genus of C */
  WZW_FIELD_N = 1,        /* dimension of the moduli space P^n */
  WZW_FIELD_D1 = 2,       /* (Sigma - c*f).C */
  WZW_FIELD_D2 = 3,       /* (c*f).C */
  WZW_FIELD_ELL = 4,      /* twist degree of the auxiliary line bundle */
  WZW_FIELD_M_CLOSED = 5, /* determinant degree, closed form */
  WZW_FIELD_M_GRR = 6,    /* determinant degree, GRR oracle */
  WZW_FIELD_DIM = 7       /* dim of the space of conformal blocks */
} wzw_report_field;

/*
 * Runs the full pipeline for the curve class C = a*Sigma + b*f on F_e with
 * c2 = c. Fails with WZW_ERR_STABILITY or WZW_ERR_PARITY on invalid input
 * and WZW_ERR_INTERNAL if the two determinant routes disagree.
 */
wzw_status wzw_report_compute(int64_t e, int64_t c, int64_t a, int64_t b, wzw_report** out);

void wzw_report_free(wzw_report* report);

/* Field value as a decimal string; free with wzw_string_free(). */
wzw_status wzw_report_value(const wzw_report* report, wzw_report_field field, char** out);

wzw_status wzw_report_smooth_hint(const wzw_report* report, wzw_hint* out);

/* ---- Self-verification -------------------------------------------------- */

typedef struct wzw_selfcheck wzw_selfcheck;

/* Runs every cross-check suite on grids scaled by `grid` (>= 1). A failed
 * suite is reported through the accessors, not through the status. */
wzw_status wzw_selfcheck_run(int32_t grid, wzw_selfcheck** out);

void wzw_selfcheck_free(wzw_selfcheck* sc);

/* 1 iff every suite ran without failures. */
int wzw_selfcheck_passed(const wzw_selfcheck* sc);

int32_t wzw_selfcheck_suite_count(const wzw_selfcheck* sc);

/* Owned by the handle; valid until wzw_selfcheck_free. NULL if out of range. */
const char* wzw_selfcheck_suite_name(const wzw_selfcheck* sc, int32_t suite);

int64_t wzw_selfcheck_suite_cases(const wzw_selfcheck* sc, int32_t suite);
int64_t wzw_selfcheck_suite_failures(const wzw_selfcheck* sc, int32_t suite);

/* Counterexamples are capped at the first 10 per suite. */
int32_t wzw_selfcheck_counterexample_count(const wzw_selfcheck* sc, int32_t suite);
const char* wzw_selfcheck_counterexample(const wzw_selfcheck* sc, int32_t suite, int32_t index);

#ifdef __cplusplus
}
#endif

#endif /* WZWBLOCKS_H */
