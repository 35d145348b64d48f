#ifndef FQSYM_H
#define FQSYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest permutation size accepted by any call.
 */
#define FQSYM_MAX_N 6

typedef enum {
  FQSYM_STATUS_OK = 0,
  FQSYM_STATUS_NULL_POINTER = 1,
  FQSYM_STATUS_INVALID_UTF8 = 2,
  FQSYM_STATUS_PARSE = 3,
  FQSYM_STATUS_UNKNOWN_BASIS = 4,
  FQSYM_STATUS_BOUND_EXCEEDED = 5,
  FQSYM_STATUS_COMPUTATION = 6,
  FQSYM_STATUS_PANIC = 7,
} FqsymStatus;

/**
 * Opaque element: a linear combination over one named basis.
 */
typedef struct FqsymElement FqsymElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an element from JSON or the text form `2*S[4132] - S[21]`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
FqsymStatus fqsym_element_parse(const char *text, FqsymElement **out);

/**
 * The basis element `basis_σ`, expanded on `G` or `F`.
 *
 * # Safety
 * `basis` and `perm` must be NUL-terminated strings and `out` a valid pointer.
 */
FqsymStatus fqsym_element_expand(const char *basis, const char *perm, FqsymElement **out);

/**
 * Rewrites `elem` on the basis named `basis`.
 *
 * # Safety
 * `elem` must be a live handle, `basis` a NUL-terminated string and `out` a valid pointer.
 */
FqsymStatus fqsym_element_convert(const FqsymElement *elem, const char *basis, FqsymElement **out);

/**
 * Product `a · b`, written on the basis of `a`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
FqsymStatus fqsym_element_product(const FqsymElement *a, const FqsymElement *b, FqsymElement **out);

/**
 * Writes `{ "basis": ..., "terms": [...] }`.
 *
 * # Safety
 * `elem` must be a live handle and `out` a valid pointer.
 */
FqsymStatus fqsym_element_to_json(const FqsymElement *elem, char **out);

/**
 * Whether two handles denote the same combination on the same basis.
 *
 * # Safety
 * `a` and `b` must be live handles or null; null handles compare unequal.
 */
bool fqsym_element_equal(const FqsymElement *a, const FqsymElement *b);

/**
 * # Safety
 * `elem` must be null or a handle obtained from this library, not yet freed.
 */
void fqsym_element_free(FqsymElement *elem);

/**
 * Transition matrix JSON: column σ holds the coefficients of `from_σ` on `to`.
 *
 * # Safety
 * `from` and `to` must be NUL-terminated strings and `out` a valid pointer.
 */
FqsymStatus fqsym_matrix_json(const char *from, const char *to, size_t n, char **out);

/**
 * Runs a verification suite at size `n`; `passed` receives the verdict and
 * `report` (if non-null) the JSON report.
 *
 * # Safety
 * `suite` must be a NUL-terminated string, `passed` a valid pointer and
 * `report` null or a valid pointer.
 */
FqsymStatus fqsym_verify(const char *suite, size_t n, bool *passed, char **report);

/**
 * Message for the last failed call on this thread, or null. Release with `fqsym_string_free`.
 */
char *fqsym_last_error(void);

/**
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void fqsym_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FQSYM_H */
