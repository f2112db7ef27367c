#ifndef ARTHUR_H
#define ARTHUR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ArthurStatus {
  ARTHUR_STATUS_OK = 0,
  /**
   * The computation ran and some check failed.
   */
  ARTHUR_STATUS_CHECK_FAILED = 1,
  ARTHUR_STATUS_INVALID_INPUT = 2,
  ARTHUR_STATUS_NULL_POINTER = 3,
  ARTHUR_STATUS_UTF8 = 4,
  ARTHUR_STATUS_PRECONDITION = 5,
  ARTHUR_STATUS_PANIC = 6,
} ArthurStatus;

/**
 * Opaque parameter handle.
 */
typedef struct ArthurParam ArthurParam;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-OK status on this thread. Valid until the next
 * call into the library from the same thread; never null.
 */
const char *arthur_last_error(void);

/**
 * Library version as a static string.
 */
const char *arthur_version(void);

/**
 * Parses a parameter file held in `source`.
 *
 * # Safety
 * `source` must be a valid NUL-terminated string and `out` writable.
 */
enum ArthurStatus arthur_param_parse(const char *source, struct ArthurParam **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must come from [`arthur_param_parse`] and not be used afterwards.
 */
void arthur_param_free(struct ArthurParam *p);

/**
 * Number of block instances.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ArthurStatus arthur_param_block_count(const struct ArthurParam *p, size_t *out);

/**
 * Dimension `sum dim(rho) a b`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ArthurStatus arthur_param_dimension(const struct ArthurParam *p, uint64_t *out);

/**
 * Canonical file text of the parameter.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ArthurStatus arthur_param_canonical(const struct ArthurParam *p, char **out);

/**
 * Orbit of the first (`sl2 = 1`) or second (`sl2 = 2`) `SL(2)` factor
 * for label `rho`, as text like `[3,3]`.
 *
 * # Safety
 * `p` must be a live handle, `rho` a NUL-terminated string and `out` writable.
 */
enum ArthurStatus arthur_orbit(const struct ArthurParam *p,
                               const char *rho,
                               uint32_t sl2,
                               char **out);

/**
 * Orbit check over every member with group sign `sign` (1 or -1).
 * Returns `CheckFailed` when some check fails. `report` may be null.
 *
 * # Safety
 * `p` must be a live handle, `rho` a NUL-terminated string and `report`
 * null or writable.
 */
enum ArthurStatus arthur_check_orbit(const struct ArthurParam *p,
                                     const char *rho,
                                     int32_t sign,
                                     char **report);

/**
 * Exponent check over every member with group sign `sign`.
 *
 * # Safety
 * As for [`arthur_check_orbit`].
 */
enum ArthurStatus arthur_check_exp(const struct ArthurParam *p,
                                   const char *rho,
                                   int32_t sign,
                                   char **report);

/**
 * Orbit comparison of `q` inside `p` along the Jacquet chain.
 *
 * # Safety
 * `p` and `q` must be live handles, `rho` a NUL-terminated string and
 * `report` null or writable.
 */
enum ArthurStatus arthur_check_clozel(const struct ArthurParam *p,
                                      const struct ArthurParam *q,
                                      const char *rho,
                                      char **report);

/**
 * One instance of the dominance lemma of kind 1, 2 or 3 for the decreasing
 * list `entries[0..len]`. `entries` may be null when `len` is 0.
 *
 * # Safety
 * `entries` must point to `len` readable values and `holds` be writable.
 */
enum ArthurStatus arthur_csq(uint32_t kind,
                             uint32_t a,
                             uint32_t b,
                             const uint32_t *entries,
                             size_t len,
                             bool *holds);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void arthur_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARTHUR_H */
