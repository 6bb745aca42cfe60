/*
 * Copyright 2026 frobase developers
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

/* C API of the frobase shared library. All operations consume and produce
 * JSON documents; handles are opaque. Functions return FRB_OK on success,
 * FRB_E_INPUT for malformed input, FRB_E_VERIFY when a verification fails,
 * and FRB_E_INTERNAL for numerical failures. The error message of the last
 * failed call is available from frb_last_error until the next call on the
 * same context. */

#ifndef FROBASE_H
#define FROBASE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FRB_OK = 0,
  FRB_E_VERIFY = 1,
  FRB_E_INPUT = 2,
  FRB_E_INTERNAL = 3
} frb_status;

typedef struct frb_ctx frb_ctx;
typedef struct frb_frobenius frb_frobenius;
typedef struct frb_covering frb_covering;

frb_ctx* frb_ctx_new(void);
void frb_ctx_free(frb_ctx* ctx);
const char* frb_last_error(const frb_ctx* ctx);
const char* frb_version(void);

/* Strings returned through out-parameters are heap allocated; release them
 * with frb_string_free. */
void frb_string_free(char* s);

frb_status frb_frobenius_parse(frb_ctx* ctx, const char* json, frb_frobenius** out);
void frb_frobenius_free(frb_frobenius* f);

frb_status frb_covering_parse(frb_ctx* ctx, const char* json, frb_covering** out);
void frb_covering_free(frb_covering* c);

/* Law verification. `laws` is a comma-separated subset of
 * unit,associativity,frobenius,strong-frobenius,speciality,commutativity,
 * nondegeneracy (NULL for the default unit,associativity,frobenius gate).
 * Returns FRB_E_VERIFY when a requested law fails; the report is produced
 * either way. */
frb_status frb_verify(frb_ctx* ctx, const frb_frobenius* f, double tol, const char* laws,
                      int markdown, char** report);

/* Artin-Wedderburn block sizes per point. */
frb_status frb_classify(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                        char** report);

/* Gelfand spectrum of a commutative structure: covering plus character table. */
frb_status frb_spectrum(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                        char** report);

/* The Frobenius structure induced by a finite covering. */
frb_status frb_from_covering(frb_ctx* ctx, const frb_covering* p, char** frobenius_json);

/* Rebase over the center plus the transitivity report. */
frb_status frb_rebase(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                      char** report);

/* Complete positivity of a morphism between two structures. The morphism
 * document carries blocks keyed by point label. */
frb_status frb_cp_check(frb_ctx* ctx, const frb_frobenius* source, const frb_frobenius* target,
                        const char* morphism_json, double tol, uint64_t seed, char** report);

/* Seeded bicategory coherence checks. */
frb_status frb_coherence(frb_ctx* ctx, uint64_t seed, int rounds, char** report);

/* The full seeded property suite; `sizes` is "small" or "full". Returns
 * FRB_E_VERIFY when any check fails. */
frb_status frb_selftest(frb_ctx* ctx, uint64_t seed, const char* sizes, double tol, int markdown,
                        char** report);

#ifdef __cplusplus
}
#endif

#endif /* FROBASE_H */
