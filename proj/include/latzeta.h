/* latzeta — exact-arithmetic sublattice, subalgebra and polynomial-congruence
 * counting over the p-adic integers.
 *
 * C interface to the shared library.  All handles are opaque; every function
 * returns a status code, with results passed through out-parameters.  Strings
 * returned through char** are heap-allocated and must be released with
 * lz_string_free.  The last error message of the calling thread is available
 * via lz_last_error.
 */
#ifndef LATZETA_H
#define LATZETA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lz_status {
    LZ_OK = 0,
    LZ_ERR_INVALID_ARGUMENT = 1,
    LZ_ERR_PARSE = 2,
    LZ_ERR_MATH = 3,
    LZ_ERR_BUDGET = 4,
    LZ_ERR_IO = 5,
    LZ_ERR_NO_FIT = 6,
    LZ_ERR_INTERNAL = 7
} lz_status;

typedef struct lz_algebra lz_algebra;
typedef struct lz_table lz_table;
typedef struct lz_series lz_series;
typedef struct lz_polysys lz_polysys;

typedef struct lz_config {
    int32_t i_max;        /* count window (clamped to 4 in dimension 4) */
    int32_t k_max;        /* c_k window */
    int32_t strata_i_max; /* record weight/type strata up to this index; -1 = none */
    int32_t type_budget;  /* cell sweep index-exponent bound */
    int32_t precision;    /* working precision K */
    int32_t workers;      /* worker threads; 0 = hardware concurrency */
    uint64_t budget;      /* point-sweep budget */
    int32_t fit_max_a;    /* candidate grid: (1 - p^a t^b), a <= fit_max_a */
    int32_t fit_max_b;    /*                                b <= fit_max_b */
    int32_t fit_max_mult; /* per-factor multiplicity cap */
    uint64_t seed;        /* randomized spot checks */
} lz_config;

void lz_config_default(lz_config* cfg);

const char* lz_status_string(lz_status status);
const char* lz_last_error(void);
void lz_string_free(char* s);

/* ---- algebras ------------------------------------------------------- */

/* Catalog names: abelian-1..abelian-4, heisenberg, filiform-4,
 * zp2-componentwise; a "pi-" prefix rescales by the uniformizer. */
lz_status lz_algebra_from_catalog(const char* name, int64_t prime, lz_algebra** out);
lz_status lz_algebra_from_text(const char* text, lz_algebra** out);
lz_status lz_algebra_from_file(const char* path, lz_algebra** out);
void lz_algebra_free(lz_algebra* a);

int32_t lz_algebra_dim(const lz_algebra* a);
int64_t lz_algebra_prime(const lz_algebra* a);
lz_status lz_algebra_name(const lz_algebra* a, char** out);
int32_t lz_algebra_is_graded(const lz_algebra* a);
lz_status lz_algebra_catalog_names(char** out); /* newline-separated */

/* ---- counting ------------------------------------------------------- */

lz_status lz_count(const lz_algebra* a, const lz_config* cfg, lz_table** out);
void lz_table_free(lz_table* t);
lz_status lz_table_records(const lz_table* t, char** out);
lz_status lz_table_text(const lz_table* t, char** out);
/* kind: "lattice" | "subalgebra" | "ideal" */
lz_status lz_table_series(const lz_table* t, const char* kind, lz_series** out);
/* exact count as a decimal string */
lz_status lz_table_count(const lz_table* t, const char* kind, int32_t i, char** out);

/* ---- series and rational reconstruction ------------------------------ */

lz_status lz_series_from_text(const char* text, lz_series** out);
lz_status lz_series_text(const lz_series* s, char** out);
void lz_series_free(lz_series* s);
/* Reports the minimal-degree exact fit over the candidate grid; LZ_ERR_NO_FIT
 * when no candidate denominator reproduces the series. */
lz_status lz_series_fit(const lz_series* s, const lz_config* cfg, char** report);

/* ---- verification suites --------------------------------------------- */

/* Suite names: abelian-oracle, heisenberg-series, theorem-a, zp2-series,
 * limit-convergence, class2-split, weight-bounds, bruhat-equivalence,
 * double-count, igusa-suite (the last one ignores the algebra).
 * outcome: 1 = pass, 0 = fail, 2 = refused (precondition not met). */
lz_status lz_verify(const lz_algebra* a, const char* suite, const lz_config* cfg,
                    char** report, int32_t* outcome);
lz_status lz_suite_names(char** out); /* newline-separated */

/* ---- polynomial congruences ------------------------------------------ */

lz_status lz_polysys_from_text(const char* text, lz_polysys** out);
lz_status lz_polysys_from_file(const char* path, lz_polysys** out);
void lz_polysys_free(lz_polysys* f);

lz_status lz_igusa_count(const lz_polysys* f, const lz_config* cfg, char** report);
lz_status lz_igusa_slopes(const lz_polysys* f, const lz_config* cfg, char** report);
/* point: comma-separated integers, one per variable */
lz_status lz_igusa_hensel(const lz_polysys* f, const char* point, int32_t k_target,
                          char** report);
/* lambdas: comma-separated rationals in [0,1], one per variable */
lz_status lz_igusa_reverse_hensel(const lz_polysys* f, const char* lambdas,
                                  const lz_config* cfg, char** report);
lz_status lz_igusa_homog(const lz_polysys* f, const lz_config* cfg, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LATZETA_H */
