#ifndef NCLOOP_H
#define NCLOOP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_INVALID_ARGUMENT = 1,
  NC_STATUS_NOT_FOUND = 2,
  NC_STATUS_NULL_POINTER = 3,
  NC_STATUS_INTERNAL = 4,
} NcStatus;

/**
 * Opaque handle around a growable S-table.
 */
typedef struct NcLoop NcLoop;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a handle with the table pre-sieved up to `initial_bound`.
 * Returns NULL if `initial_bound` is 0.
 */
struct NcLoop *ncloop_new(uint64_t initial_bound);

/**
 * # Safety
 * `h` must be NULL or a handle from [`ncloop_new`] not yet freed.
 */
void ncloop_free(struct NcLoop *h);

/**
 * Current bound of the handle's table (0 for a NULL handle).
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
uint64_t ncloop_table_bound(const struct NcLoop *h);

/**
 * True iff `n` is 1 or an odd prime.
 */
bool ncloop_is_in_s(uint64_t n);

/**
 * `N(x)`, the least element of S greater than `x`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_next_in_s(const struct NcLoop *h, uint64_t x, uint64_t *out);

/**
 * `a • b`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_dot(const struct NcLoop *h, uint64_t a, uint64_t b, uint64_t *out);

/**
 * Zero-based rank of `s` in S.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_rank(const struct NcLoop *h, uint64_t s, uint64_t *out);

/**
 * Whether `a` and `b` are consecutive elements of S.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_adjacent_in_s(const struct NcLoop *h, uint64_t a, uint64_t b, bool *out);

/**
 * Smallest `a ≥ s`, `a ≤ limit`, with `a • s = a`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_absorbing_partner(const struct NcLoop *h,
                                       uint64_t s,
                                       uint64_t limit,
                                       uint64_t *out);

/**
 * Smallest odd prime `≤ limit` preceded by at least `min_run` non-primes.
 *
 * # Safety
 * `h` must be a live handle; `out_prime` and `out_run` valid pointers.
 */
enum NcStatus ncloop_gap_search(const struct NcLoop *h,
                                uint64_t min_run,
                                uint64_t limit,
                                uint64_t *out_prime,
                                uint64_t *out_run);

/**
 * Number of pairs `a > b` in `S ∩ [1, bound]` with `a • b = x`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum NcStatus ncloop_fiber_count(const struct NcLoop *h,
                                 uint64_t x,
                                 uint64_t bound,
                                 bool include_one,
                                 uint64_t *out);

/**
 * Run a CLI invocation in-process. `argv` holds `argc` NUL-terminated
 * UTF-8 strings and excludes the program name. Standard output of the run
 * is returned in `*out_stdout` (free with [`ncloop_string_free`]) and the
 * CLI exit status in `*out_exit`. The return value reports only FFI-level
 * failures; a nonzero exit status is still `NC_STATUS_OK`.
 *
 * # Safety
 * `argv` must point to `argc` valid C strings; out-pointers must be valid.
 */
enum NcStatus ncloop_cli_run(const char *const *argv,
                             size_t argc,
                             char **out_stdout,
                             int32_t *out_exit);

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *ncloop_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void ncloop_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ncloop_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCLOOP_H */
