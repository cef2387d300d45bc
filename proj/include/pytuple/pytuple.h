/*
 * pytuple - enumeration of Pythagorean triples, n-tuple completions and
 * tuple chains through the admissible hypotenuse-leg gaps of a given leg
 * set, with count forecasting and brute-force differential verification.
 *
 * C API of the shared library. Every number crossing this boundary is an
 * exact decimal string, so values of any magnitude survive the trip.
 * Calls that produce data hand back an opaque pytuple_result: a small
 * table of string cells plus a string->string metadata map. Results are
 * immutable; free them with pytuple_result_free. All functions are
 * thread-safe; the last-error message is thread-local.
 */

#ifndef PYTUPLE_H
#define PYTUPLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pytuple_status {
    PYTUPLE_OK = 0,
    PYTUPLE_ERROR_ARGUMENT = 1,           /* null pointer or malformed call */
    PYTUPLE_ERROR_DOMAIN = 2,             /* input outside the operation's domain */
    PYTUPLE_ERROR_INVALID_DELTA = 3,      /* delta fails divisibility, parity or size */
    PYTUPLE_ERROR_BUDGET_EXCEEDED = 4,    /* factoring effort limit hit */
    PYTUPLE_ERROR_ORACLE_CAP_EXCEEDED = 5,/* brute-force scan refused above its cap */
    PYTUPLE_ERROR_MAGNITUDE_EXCEEDED = 6, /* chain seed beyond the magnitude limit */
    PYTUPLE_ERROR_INTERNAL = 7
} pytuple_status;

const char* pytuple_status_name(pytuple_status status);

/* Message describing this thread's most recent failure; empty, never NULL. */
const char* pytuple_last_error(void);

const char* pytuple_version(void);

typedef enum pytuple_class_filter {
    PYTUPLE_CLASS_ALL = 0,
    PYTUPLE_CLASS_PRIMITIVE = 1,
    PYTUPLE_CLASS_NON_PRIMITIVE = 2
} pytuple_class_filter;

/* ------------------------------------------------------------------ */
/* results                                                             */

typedef struct pytuple_result pytuple_result;

void pytuple_result_free(pytuple_result* result);

size_t pytuple_result_row_count(const pytuple_result* result);
size_t pytuple_result_column_count(const pytuple_result* result);

/* NULL when the index is out of range. Returned strings live as long as
 * the result. Booleans render as "true"/"false". */
const char* pytuple_result_column_name(const pytuple_result* result, size_t column);
const char* pytuple_result_cell(const pytuple_result* result, size_t row, size_t column);

/* NULL when the key is absent. */
const char* pytuple_result_meta(const pytuple_result* result, const char* key);
size_t pytuple_result_meta_count(const pytuple_result* result);
const char* pytuple_result_meta_key(const pytuple_result* result, size_t index);

/* ------------------------------------------------------------------ */
/* enumeration                                                         */

/* Triples with the given leg, one row per admissible gap, ascending.
 * Columns: delta, b, c, primitive. Meta: input.
 * factor_budget 0 selects the library default. */
pytuple_status pytuple_triples(const char* leg, pytuple_class_filter filter,
                               uint64_t factor_budget, pytuple_result** out);

/* Count forecast for a leg, derived from its factorization alone.
 * Columns: delta (the predicted primitive gaps, ascending).
 * Meta: input, total, primitive, non_primitive. */
pytuple_status pytuple_forecast(const char* leg, uint64_t factor_budget, pytuple_result** out);

/* Completions (a_{n-1}, a_n) for the given legs.
 * Columns: delta, completion, hypotenuse, primitive.
 * Meta: input, k, feasible, reason ("none" or "k_congruent_2_mod_4"). */
pytuple_status pytuple_completions(const char* const* legs, size_t leg_count,
                                   pytuple_class_filter filter, uint64_t factor_budget,
                                   pytuple_result** out);

/* ------------------------------------------------------------------ */
/* chains                                                              */

typedef enum pytuple_chain_strategy {
    PYTUPLE_CHAIN_ALL_BRANCHES = 0,
    PYTUPLE_CHAIN_PRIMITIVE_ONLY = 1,
    PYTUPLE_CHAIN_MIN_DELTA = 2
} pytuple_chain_strategy;

typedef struct pytuple_chain_options {
    uint32_t depth;                  /* number of extensions, >= 1 */
    pytuple_chain_strategy strategy;
    uint64_t max_branches;           /* per-level width limit; 0 = default (10000) */
    const char* max_magnitude;       /* hypotenuse cutoff; NULL or "" = unlimited */
    uint64_t factor_budget;          /* 0 = default */
} pytuple_chain_options;

/* Chains grown from a seed, ordered by their delta sequences.
 * Columns: legs (space-separated), hypotenuse, deltas (space-separated),
 * primitive_branch, capped. Meta: input, depth, strategy, truncated. */
pytuple_status pytuple_chains(const char* seed, const pytuple_chain_options* options,
                              pytuple_result** out);

/* ------------------------------------------------------------------ */
/* verification                                                        */

typedef struct pytuple_verify_options {
    uint64_t max_leg;       /* 0 = mode default */
    uint64_t max_m;
    uint64_t max_k;
    uint64_t corpus_size;
    uint64_t factor_budget;
} pytuple_verify_options;

/* Differential suites: "triples-oracle", "tuples-oracle", "predictor",
 * "euclid-coverage", "counts". One row per discrepancy (columns: input,
 * detail); a clean run has zero rows. Meta: mode, checked, discrepancies.
 * options may be NULL for all defaults. */
pytuple_status pytuple_verify(const char* mode, const pytuple_verify_options* options,
                              pytuple_result** out);

#ifdef __cplusplus
}
#endif

#endif /* PYTUPLE_H */
