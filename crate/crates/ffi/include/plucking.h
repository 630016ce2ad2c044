#ifndef PLUCKING_H
#define PLUCKING_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PkStatus {
  PK_STATUS_OK = 0,
  PK_STATUS_NULL_POINTER = 1,
  PK_STATUS_INVALID_UTF8 = 2,
  PK_STATUS_PARSE = 3,
  PK_STATUS_INVALID_ARGUMENT = 4,
  PK_STATUS_OVERFLOW = 5,
  PK_STATUS_PANIC = 6,
} PkStatus;

// A plane rooted tree with a delay value on every leaf.
typedef struct PkDelayedTree PkDelayedTree;

// A polynomial in `q` with integer coefficients.
typedef struct PkPoly PkPoly;

// A plane rooted tree.
typedef struct PkTree PkTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *pk_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void pk_string_free(char *s);

// Parses parenthesis notation such as `(()(()()))`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum PkStatus pk_tree_parse(const char *text, struct PkTree **out);

// # Safety
// `tree` must come from this library and not have been freed. NULL is ignored.
void pk_tree_free(struct PkTree *tree);

// Number of leaves, or 0 for NULL.
//
// # Safety
// `tree` must be NULL or a live handle.
size_t pk_tree_leaf_count(const struct PkTree *tree);

// Number of edges, or 0 for NULL.
//
// # Safety
// `tree` must be NULL or a live handle.
size_t pk_tree_edge_count(const struct PkTree *tree);

// # Safety
// `tree` must be a live handle and `out` writable.
enum PkStatus pk_tree_to_string(const struct PkTree *tree, char **out);

// Parses delayed notation such as `(2((3))1)`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum PkStatus pk_delayed_tree_parse(const char *text, struct PkDelayedTree **out);

// A tree with `delays[i]` on its `i`-th leaf from the left.
//
// # Safety
// `tree` must be a live handle, `delays` must point to `len` values, and
// `out` must be writable.
enum PkStatus pk_delayed_tree_new(const struct PkTree *tree,
                                  const uint32_t *delays,
                                  size_t len,
                                  struct PkDelayedTree **out);

// A hedgehog whose leaves carry `delays`, left to right.
//
// # Safety
// `delays` must point to `len` values and `out` must be writable.
enum PkStatus pk_delayed_hedgehog(const uint32_t *delays, size_t len, struct PkDelayedTree **out);

// # Safety
// `tree` must come from this library and not have been freed. NULL is ignored.
void pk_delayed_tree_free(struct PkDelayedTree *tree);

// # Safety
// `tree` must be a live handle and `out` writable.
enum PkStatus pk_delayed_tree_to_string(const struct PkDelayedTree *tree, char **out);

// `Q(T)`.
//
// # Safety
// `tree` must be a live handle and `out` writable.
enum PkStatus pk_plucking(const struct PkTree *tree, struct PkPoly **out);

// `Q(T, f)`.
//
// # Safety
// `tree` must be a live handle and `out` writable.
enum PkStatus pk_plucking_delay(const struct PkDelayedTree *tree, struct PkPoly **out);

// Closed form for an anti-unimodal delayed hedgehog.
//
// # Safety
// `delays` must point to `len` values and `out` must be writable.
enum PkStatus pk_hedgehog_anti_unimodal(const uint32_t *delays, size_t len, struct PkPoly **out);

// Closed form for the hedgehog `1^2 4^k 1^2`.
//
// # Safety
// `out` must be writable.
enum PkStatus pk_family_1_4k_1(size_t k, struct PkPoly **out);

// A polynomial from `len` coefficients, `coeffs[i]` multiplying `q^i`.
//
// # Safety
// `coeffs` must point to `len` values and `out` must be writable.
enum PkStatus pk_poly_from_i64(const int64_t *coeffs, size_t len, struct PkPoly **out);

// Parses a comma-separated coefficient list such as `1,2,2,1`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum PkStatus pk_poly_parse(const char *text, struct PkPoly **out);

// # Safety
// `poly` must come from this library and not have been freed. NULL is ignored.
void pk_poly_free(struct PkPoly *poly);

// Degree, or -1 for the zero polynomial and for NULL.
//
// # Safety
// `poly` must be NULL or a live handle.
int64_t pk_poly_degree(const struct PkPoly *poly);

// Coefficient of `q^i`; `PkStatus::Overflow` when it does not fit in 64 bits.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum PkStatus pk_poly_coeff(const struct PkPoly *poly, size_t i, int64_t *out);

// Text form, e.g. `1 + 2*q + q^2`.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum PkStatus pk_poly_to_string(const struct PkPoly *poly, char **out);

// JSON form `{"low":..,"coeffs":[..]}` with exact big-integer coefficients.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum PkStatus pk_poly_to_json(const struct PkPoly *poly, char **out);

// Factored form such as `q^3 [3]_q [2]_q^2`. Fails on the zero polynomial.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum PkStatus pk_poly_factor(const struct PkPoly *poly, char **out);

// Writes the unimodal, strictly-unimodal and symmetric verdicts.
//
// # Safety
// `poly` must be a live handle and the three out-pointers writable.
enum PkStatus pk_poly_shape(const struct PkPoly *poly,
                            bool *unimodal,
                            bool *strictly_unimodal,
                            bool *symmetric);

// Whether two polynomials are equal; false if either is NULL.
//
// # Safety
// Both arguments must be NULL or live handles.
bool pk_poly_equal(const struct PkPoly *a, const struct PkPoly *b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLUCKING_H */
