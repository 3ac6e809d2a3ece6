#ifndef LINCO_H
#define LINCO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LincoMethod {
  LINCO_METHOD_PARTITION_SUM = 0,
  LINCO_METHOD_ORACLE = 1,
} LincoMethod;

typedef enum LincoStatus {
  LINCO_STATUS_OK = 0,
  LINCO_STATUS_NULL_ARGUMENT = 1,
  LINCO_STATUS_INVALID_ARGUMENT = 2,
  LINCO_STATUS_SIZE_LIMIT = 3,
  LINCO_STATUS_IDENTITY_VIOLATION = 4,
  LINCO_STATUS_UNSUPPORTED = 5,
  LINCO_STATUS_VERIFICATION_FAILED = 6,
  LINCO_STATUS_PANIC = 7,
} LincoStatus;

/*
 Basis coefficients of a product, index `m` for `P_m`.
 */
typedef struct LincoExpansion LincoExpansion;

/*
 An exact polynomial in `t`, `q`, `alpha`.
 */
typedef struct LincoPoly LincoPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or null. Valid until
 the next `linco_*` call on the same thread.
 */
const char *linco_last_error(void);

/*
 `⟨P_{n_1} ⋯ P_{n_k}⟩` for the named family; `method` is a [`LincoMethod`].

 # Safety
 `family` must be a nul-terminated string, `degrees` must point to `len`
 values (or be null when `len` is 0), and `out` must be writable.
 */
enum LincoStatus linco_linearize(const char *family,
                                 const size_t *degrees,
                                 size_t len,
                                 int method,
                                 struct LincoPoly **out);

/*
 Basis expansion of `P_{n_1} ⋯ P_{n_k}`.

 # Safety
 Same contract as [`linco_linearize`].
 */
enum LincoStatus linco_expand(const char *family,
                              const size_t *degrees,
                              size_t len,
                              struct LincoExpansion **out);

/*
 Number of coefficients (`n + 1`), or 0 for a null handle.

 # Safety
 `e` must be null or a live handle from [`linco_expand`].
 */
size_t linco_expansion_len(const struct LincoExpansion *e);

/*
 Copy of coefficient `index` as a new polynomial handle.

 # Safety
 `e` must be a live expansion handle and `out` writable.
 */
enum LincoStatus linco_expansion_coeff(const struct LincoExpansion *e,
                                       size_t index,
                                       struct LincoPoly **out);

/*
 Evaluates `p` at bindings such as `"q=1,t=3/2"`.

 # Safety
 `p` must be a live handle, `bindings` a nul-terminated string, `out` writable.
 */
enum LincoStatus linco_poly_substitute(const struct LincoPoly *p,
                                       const char *bindings,
                                       struct LincoPoly **out);

/*
 Canonical text such as `"t^2*q + t^2"`. Free with [`linco_string_free`].

 # Safety
 `p` must be null or a live handle.
 */
char *linco_poly_to_string(const struct LincoPoly *p);

/*
 JSON term list. Free with [`linco_string_free`].

 # Safety
 `p` must be null or a live handle.
 */
char *linco_poly_to_json(const struct LincoPoly *p);

/*
 Parses a JSON term list produced by [`linco_poly_to_json`].

 # Safety
 `json` must be a nul-terminated string and `out` writable.
 */
enum LincoStatus linco_poly_from_json(const char *json, struct LincoPoly **out);

/*
 1 when equal, 0 when not, -1 if either handle is null.

 # Safety
 Both pointers must be null or live handles.
 */
int linco_poly_equal(const struct LincoPoly *a, const struct LincoPoly *b);

/*
 Counts inhomogeneous partitions of the composition passing `filter`
 (`"all"`, `"pair"`, `"noncrossing"`, ...).

 # Safety
 `parts` must point to `len` values, `filter` be nul-terminated, `out` writable.
 */
enum LincoStatus linco_partition_count(const size_t *parts,
                                       size_t len,
                                       const char *filter,
                                       uint64_t *out);

/*
 Runs a verification suite. Returns `VerificationFailed` when any check
 fails; the report text is then in [`linco_last_error`].

 # Safety
 `suite` must be a nul-terminated string.
 */
enum LincoStatus linco_verify(const char *suite, size_t max_n);

/*
 # Safety
 `p` must be null or a handle not yet freed.
 */
void linco_poly_free(struct LincoPoly *p);

/*
 # Safety
 `e` must be null or a handle not yet freed.
 */
void linco_expansion_free(struct LincoExpansion *e);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void linco_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINCO_H */
