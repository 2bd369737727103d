/* SPDX-License-Identifier: Apache-2.0 */
/*
 * covgon — certified covering-gonality lower bounds for complete
 * intersections, exact Hilbert-function computations, prime-degree
 * selection, and mechanically replayable feasibility arguments.
 *
 * C interface over the exact-arithmetic core. All computations run in exact
 * integer/rational arithmetic; irrational quantities are handled through
 * certified rational enclosures. Every function reports through a JSON
 * document (rationals as "p/q" strings, never floats); identical inputs
 * produce byte-identical output.
 *
 * Conventions:
 *  - Potentially large numeric inputs are decimal strings, so no caller-side
 *    precision is ever lost. Structurally small parameters (dimensions,
 *    exponents of the induction) are plain integers.
 *  - On success the out parameter receives a malloc'd NUL-terminated JSON
 *    string; release it with covgon_str_free.
 *  - On failure the out parameter is untouched and covgon_last_error(ctx)
 *    returns a JSON error object naming the violated condition.
 */
#ifndef COVGON_H
#define COVGON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct covgon_ctx covgon_ctx;

typedef enum covgon_status {
  COVGON_OK = 0,
  COVGON_HYPOTHESIS_ERROR = 1, /* a stated hypothesis failed */
  COVGON_WITNESS_FOUND = 2,    /* verification produced a counterexample */
  COVGON_USAGE_ERROR = 3,      /* malformed arguments */
  COVGON_INTERNAL_ERROR = 4
} covgon_status;

covgon_ctx* covgon_ctx_new(void);
void covgon_ctx_free(covgon_ctx* ctx);

/* Default enclosure precision (target width 10^-precision); initially 12. */
covgon_status covgon_ctx_set_precision(covgon_ctx* ctx, int64_t precision);
int64_t covgon_ctx_precision(const covgon_ctx* ctx);

/* JSON error object for the most recent failing call on this context; valid
 * until the next call that uses the context. */
const char* covgon_last_error(const covgon_ctx* ctx);

void covgon_str_free(char* s);
const char* covgon_version(void);

/* --- gonality bounds ---------------------------------------------------- */

covgon_status covgon_bound_codim2(covgon_ctx* ctx, int64_t n, const char* a,
                                  const char* b, char** json_out);

covgon_status covgon_bound_surface_special(covgon_ctx* ctx, int64_t e,
                                           const char* const* adjusted,
                                           size_t count, char** json_out);

covgon_status covgon_bound_surface_general(covgon_ctx* ctx, int64_t e,
                                           const char* const* degrees,
                                           size_t count, char** json_out);

/* A(e) and B(e). */
covgon_status covgon_constants(covgon_ctx* ctx, int64_t e, char** json_out);

/* --- Hilbert functions --------------------------------------------------- */

/* Section counts of a complete intersection of dimension n and the given
 * type at the given twist, via the nested-sum and inclusion-exclusion routes;
 * with include_series_oracle != 0 the series-coefficient oracle is added
 * (requires twist >= 0). */
covgon_status covgon_hilbert(covgon_ctx* ctx, int64_t n, int64_t codim,
                             const char* const* degrees, size_t count,
                             const char* twist, int include_series_oracle,
                             char** json_out);

/* --- primes --------------------------------------------------------------*/

/* n-th Ramanujan prime; when verify_horizon is non-NULL and positive the
 * defining property is additionally re-checked for every integer up to it. */
covgon_status covgon_ramanujan_prime(covgon_ctx* ctx, int64_t n,
                                     const char* verify_horizon,
                                     char** json_out);

covgon_status covgon_prime_pi(covgon_ctx* ctx, const char* x, char** json_out);

covgon_status covgon_select_prime_degrees(covgon_ctx* ctx, int64_t e,
                                          const char* const* degrees,
                                          size_t count, char** json_out);

covgon_status covgon_min_curve_degree(covgon_ctx* ctx, int64_t n, int64_t f,
                                      const char* const* factors, size_t count,
                                      char** json_out);

/* --- genus and multiplicity bounds --------------------------------------- */

covgon_status covgon_genus_lower(covgon_ctx* ctx, int64_t n, int64_t codim,
                                 const char* const* degrees, size_t count,
                                 const char* curve_degree, char** json_out);

/* genus_lb accepts "p" or "p/q". */
covgon_status covgon_genus_gap(covgon_ctx* ctx, const char* degree,
                               const char* genus_lb, char** json_out);

covgon_status covgon_genus_delta(covgon_ctx* ctx, int64_t n, const char* mult,
                                 char** json_out);

covgon_status covgon_genus_castelnuovo(covgon_ctx* ctx,
                                       const char* const* degrees_y,
                                       size_t count, const char* a_e,
                                       const char* curve_degree,
                                       char** json_out);

/* exponent accepts "p" or "p/q" and must be >= 1. */
covgon_status covgon_genus_min_power_sum(covgon_ctx* ctx, const char* total,
                                         const char* parts,
                                         const char* exponent,
                                         char** json_out);

/* --- induction replays ---------------------------------------------------*/

/* Returns COVGON_WITNESS_FOUND (with the full report) when any induction
 * step admits a satisfying curve class. k_max may be NULL for the default
 * search horizon. */
covgon_status covgon_verify_codim2(covgon_ctx* ctx, int64_t n, const char* a,
                                   const char* b, const char* k_max,
                                   char** json_out);

covgon_status covgon_verify_surface(covgon_ctx* ctx, int64_t e,
                                    const char* const* adjusted, size_t count,
                                    const char* k_max, char** json_out);

/* --- dimension counts ---------------------------------------------------- */

covgon_status covgon_dimcheck_first(covgon_ctx* ctx, int64_t e,
                                    const char* const* degrees_y, size_t count,
                                    const char* a_e, int64_t s,
                                    char** json_out);

covgon_status covgon_dimcheck_second(covgon_ctx* ctx, int64_t e,
                                     const char* const* degrees_y, size_t count,
                                     const char* b1, const char* a_e, int64_t s,
                                     char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* COVGON_H */
