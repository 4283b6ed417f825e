#ifndef POLYROOK_H
#define POLYROOK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PrStatus {
  PR_STATUS_OK = 0,
  PR_STATUS_NULL_POINTER = 1,
  PR_STATUS_INVALID_UTF8 = 2,
  PR_STATUS_PARSE = 3,
  PR_STATUS_INVALID_ARGUMENT = 4,
  PR_STATUS_NOT_CONVEX = 5,
  PR_STATUS_CONDITION_FAILS = 6,
  PR_STATUS_TOO_LARGE = 7,
  PR_STATUS_OVERFLOW = 8,
  PR_STATUS_OUT_OF_RANGE = 9,
  PR_STATUS_INTERNAL = 10,
  PR_STATUS_PANIC = 11,
} PrStatus;

typedef enum PrOrder {
  PR_ORDER_REV = 0,
  PR_ORDER_LEX = 1,
} PrOrder;

typedef enum PrKind {
  PR_KIND_POLYOMINO = 0,
  PR_KIND_COLLECTION = 1,
} PrKind;

/**
 * A finite collection of cells.
 */
typedef struct PrCollection PrCollection;

/**
 * An owned list of collections.
 */
typedef struct PrCollectionList PrCollectionList;

/**
 * A polynomial with integer coefficients.
 */
typedef struct PrPolynomial PrPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * success. Valid until the next call into the library on the same thread.
 */
const char *pr_last_error(void);

/**
 * Parses the brace notation, e.g. `{{{1,1},{2,2}},{{2,1},{3,2}}}`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum PrStatus pr_collection_parse(const char *text, struct PrCollection **out);

/**
 * Builds a collection from `ncells` lower-left corners stored as
 * consecutive `(i, j)` pairs in `coords`.
 *
 * # Safety
 * `coords` must point to `2 * ncells` readable integers (or may be NULL
 * when `ncells` is 0) and `out` must be writable.
 */
enum PrStatus pr_collection_from_cells(const int32_t *coords,
                                       size_t ncells,
                                       struct PrCollection **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library that has not been freed.
 */
void pr_collection_free(struct PrCollection *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_collection_rank(const struct PrCollection *p, size_t *out);

/**
 * Writes a newly allocated string; release it with [`pr_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_collection_format(const struct PrCollection *p, char **out);

/**
 * Representative of the orbit under translations and the eight symmetries
 * of the square.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_collection_canonical(const struct PrCollection *p, struct PrCollection **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void pr_string_free(char *s);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_rook_polynomial(const struct PrCollection *p, struct PrPolynomial **out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_rook_number(const struct PrCollection *p, size_t *out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_switching_rook_polynomial(const struct PrCollection *p, struct PrPolynomial **out);

/**
 * h-polynomial of the coordinate ring. `krull_dim` may be NULL.
 *
 * # Safety
 * `p` must be a live handle, `out` writable and `krull_dim` NULL or writable.
 */
enum PrStatus pr_h_polynomial(const struct PrCollection *p,
                              enum PrOrder ord,
                              struct PrPolynomial **out,
                              size_t *krull_dim);

/**
 * h-polynomial through the convex recursion. `certified` is set to false
 * when the recursion did not apply and the general engine answered.
 *
 * # Safety
 * `p` must be a live handle, `out` writable and `certified` NULL or writable.
 */
enum PrStatus pr_convex_h(const struct PrCollection *p, struct PrPolynomial **out, bool *certified);

/**
 * Whether the generators already form a Gröbner basis under `ord`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_quadratic_basis(const struct PrCollection *p, enum PrOrder ord, bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_polynomial_degree(const struct PrPolynomial *p, size_t *out);

/**
 * Coefficient of `t^k`; zero beyond the degree. Fails with
 * `PR_STATUS_OVERFLOW` when it does not fit in 64 bits.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum PrStatus pr_polynomial_coeff(const struct PrPolynomial *p, size_t k, int64_t *out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library that has not been freed.
 */
void pr_polynomial_free(struct PrPolynomial *p);

/**
 * All shapes of one rank up to symmetry, in canonical form.
 *
 * # Safety
 * `out` must be writable.
 */
enum PrStatus pr_enumerate(enum PrKind k, size_t rank, struct PrCollectionList **out);

/**
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum PrStatus pr_list_len(const struct PrCollectionList *l, size_t *out);

/**
 * Copies element `index` into a new collection handle.
 *
 * # Safety
 * `l` must be a live handle and `out` writable.
 */
enum PrStatus pr_list_get(const struct PrCollectionList *l,
                          size_t index,
                          struct PrCollection **out);

/**
 * # Safety
 * `l` must be NULL or a handle from this library that has not been freed.
 */
void pr_list_free(struct PrCollectionList *l);

/**
 * Compares switching rook polynomials with h-polynomials on every shape of
 * one rank. `counterexamples` receives how many disagree.
 *
 * # Safety
 * `verified` and `counterexamples` must be writable.
 */
enum PrStatus pr_verify(enum PrKind k,
                        size_t rank,
                        size_t jobs,
                        size_t *verified,
                        size_t *counterexamples);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYROOK_H */
