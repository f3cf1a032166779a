/*
 * facthankel -- exact factorial Hankel matrices as a C library.
 *
 * The library constructs the n x n matrix with entries 1/(i+j-1)!, its
 * exact integer inverse (by three independent closed-form routes or by
 * exact Gaussian elimination), verifies the inverse exactly, checks the
 * supporting binomial-coefficient identities, and measures binary64
 * conditioning against the exact results.
 *
 * Conventions:
 *   - Every fallible call returns fh_status; FH_OK is 0.
 *   - Matrices are opaque fh_matrix handles, released with
 *     fh_matrix_destroy. Row/column indices are 1-based.
 *   - Scalar results are decimal strings ("p" or "p/q"), since entries
 *     outgrow every machine integer type; release them with
 *     fh_string_free. Output pointers are written only on FH_OK.
 */

#ifndef FACTHANKEL_H
#define FACTHANKEL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fh_status {
  FH_OK = 0,
  FH_ERROR_INVALID_ARGUMENT = 1,
  FH_ERROR_SINGULAR = 2,
  FH_ERROR_PARSE = 3,
  FH_ERROR_OVERFLOW = 4,
  FH_ERROR_NOMEM = 5,
  FH_ERROR_INTERNAL = 6
} fh_status;

typedef enum fh_format {
  FH_FORMAT_CSV = 0,
  FH_FORMAT_JSON = 1,
  FH_FORMAT_MATRIX_MARKET = 2
} fh_format;

typedef enum fh_method {
  FH_METHOD_CLOSED = 0,
  FH_METHOD_GOVER_FACTORIAL = 1,
  FH_METHOD_GOVER_BINOMIAL = 2,
  FH_METHOD_GAUSS = 3
} fh_method;

/* Tag recorded in the JSON serialization. */
typedef enum fh_kind {
  FH_KIND_MATRIX = 0,
  FH_KIND_HANKEL = 1,
  FH_KIND_INVERSE = 2
} fh_kind;

typedef struct fh_matrix fh_matrix;

const char* fh_version(void);
const char* fh_status_string(fh_status status);
void fh_string_free(char* text);

/* ---- matrix construction and access ---- */

fh_status fh_hankel_create(int64_t order, fh_matrix** out);
fh_status fh_inverse_create(int64_t order, fh_method method, fh_matrix** out);
void fh_matrix_destroy(fh_matrix* matrix);

fh_status fh_matrix_order(const fh_matrix* matrix, int64_t* out);
fh_status fh_matrix_kind(const fh_matrix* matrix, fh_kind* out);
/* Entry as a canonical "p" or "p/q" string. */
fh_status fh_matrix_entry(const fh_matrix* matrix, int64_t row, int64_t col,
                          char** out);
/* Overwrite one entry; value uses the same "p" or "p/q" syntax. */
fh_status fh_matrix_set_entry(fh_matrix* matrix, int64_t row, int64_t col,
                              const char* value);

/* ---- exact operations ---- */

fh_status fh_matrix_mul(const fh_matrix* a, const fh_matrix* b,
                        fh_matrix** out);
/* Exact inverse by Gaussian elimination; FH_ERROR_SINGULAR if singular. */
fh_status fh_matrix_gauss_inverse(const fh_matrix* matrix, fh_matrix** out);
fh_status fh_matrix_is_identity(const fh_matrix* matrix, int* out);
fh_status fh_matrix_equal(const fh_matrix* a, const fh_matrix* b, int* out);
/* Maximum absolute row sum, exact. */
fh_status fh_matrix_inf_norm(const fh_matrix* matrix, char** out);

/* ---- serialization ---- */

/* CSV and JSON are exact; Matrix Market rounds entries to binary64. */
fh_status fh_matrix_format(const fh_matrix* matrix, fh_format format,
                           char** out);
fh_status fh_matrix_parse(const char* text, fh_format format, fh_matrix** out);

/* ---- combinatorics ---- */

fh_status fh_factorial(int64_t n, char** out);
/* General binomial coefficient: integer upper argument of either sign;
 * negative lower argument yields "0". */
fh_status fh_binomial(int64_t upper, int64_t lower, char** out);
fh_status fh_reflection_holds(int64_t upper, int64_t m, int* out);
fh_status fh_chu_vandermonde_holds(int64_t s, int64_t t, int64_t m, int* out);

/* ---- verification ---- */

/* Exact two-sided check that the closed-form inverse inverts the Hankel
 * matrix of the given order; *out is 1 on success, 0 on mismatch. */
fh_status fh_verify_inverse(int64_t order, int* out);
/* Entrywise agreement of the three inverse formulas at this order. */
fh_status fh_formulas_agree(int64_t order, int* out);
/* Exact two-sided check of an arbitrary candidate against the Hankel
 * matrix of matching order. */
fh_status fh_matrix_is_inverse_of_hankel(const fh_matrix* matrix, int* out);
/* Row-sum reduction identity behind the closed form; domain
 * 1 <= i, l <= order, 0 <= k <= i-1. */
fh_status fh_row_sum_identity_holds(int64_t order, int64_t i, int64_t l,
                                    int64_t k, int* out);
/* Alternating Kronecker-delta sum; domain 1 <= i, l <= order. Result is
 * the exact value as a decimal string. */
fh_status fh_delta_sum(int64_t order, int64_t i, int64_t l, char** out);

/* ---- conditioning ---- */

/* Exact infinity-norm condition number; exact_out gets the "p" or "p/q"
 * string, approx_out the nearest binary64. Either output may be NULL. */
fh_status fh_cond_inf(int64_t order, char** exact_out, double* approx_out);
/* Conditioning study over orders 1..max_order, serialized in the given
 * format: per order (n, exact cond_inf, LU inverse max relative error,
 * binary64 formula evaluation max relative error). */
fh_status fh_study_format(int64_t max_order, fh_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FACTHANKEL_H */
