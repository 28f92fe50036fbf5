#ifndef REGCHAINS_H
#define REGCHAINS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RcFormat {
  RC_FORMAT_TEXT = 0,
  RC_FORMAT_JSON = 1,
} RcFormat;

typedef enum RcMode {
  RC_MODE_LAZARD = 0,
  RC_MODE_KALKBRENER = 1,
} RcMode;

typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_ARGUMENT = 1,
  RC_STATUS_INVALID_UTF8 = 2,
  RC_STATUS_PARSE = 3,
  RC_STATUS_INVALID_ARGUMENT = 4,
  RC_STATUS_TIMEOUT = 5,
  /*
   The prime divides a coefficient or breaks a chain of the result.
   */
  RC_STATUS_INADMISSIBLE_PRIME = 6,
  /*
   Any other error reported by the solver.
   */
  RC_STATUS_FAILED = 7,
  /*
   A bug in the library; the handles involved are left untouched.
   */
  RC_STATUS_INTERNAL = 8,
} RcStatus;

/*
 The regular chains computed for a system.
 */
typedef struct RcDecomposition RcDecomposition;

/*
 A parsed polynomial system.
 */
typedef struct RcSystem RcSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a system in the `.sys` text format.

 # Safety
 `text` must be a NUL-terminated string and `out` a valid pointer. On
 success `*out` receives a handle to free with [`rc_system_free`].
 */
enum RcStatus rc_system_parse(const char *text, struct RcSystem **out);

/*
 Number of variables of the system, or 0 for a null handle.

 # Safety
 `sys` must be null or a live handle from [`rc_system_parse`].
 */
size_t rc_system_nvars(const struct RcSystem *sys);

/*
 Number of polynomials in the system, or 0 for a null handle.

 # Safety
 `sys` must be null or a live handle from [`rc_system_parse`].
 */
size_t rc_system_len(const struct RcSystem *sys);

/*
 # Safety
 `sys` must be null or a handle from [`rc_system_parse`] not freed before.
 */
void rc_system_free(struct RcSystem *sys);

/*
 Decomposes the system. `jobs` of 0 or 1 runs on the calling thread;
 `timeout_ms` of 0 means no limit.

 # Safety
 `sys` must be a live system handle and `out` a valid pointer. On success
 `*out` receives a handle to free with [`rc_decomposition_free`].
 */
enum RcStatus rc_solve(const struct RcSystem *sys,
                       enum RcMode mode,
                       bool squarefree,
                       uint32_t jobs,
                       uint64_t timeout_ms,
                       struct RcDecomposition **out);

/*
 Number of chains, or 0 for a null handle.

 # Safety
 `d` must be null or a live handle from [`rc_solve`].
 */
size_t rc_decomposition_len(const struct RcDecomposition *d);

/*
 Chain `index` as `[p_k, ..., p_1]`, greatest main variable first. Null
 when the handle is null or the index out of range.

 # Safety
 `d` must be null or a live handle from [`rc_solve`].
 */
char *rc_decomposition_chain(const struct RcDecomposition *d, size_t index);

/*
 The whole decomposition in the command line tool's text or JSON format.

 # Safety
 `d` must be null or a live handle from [`rc_solve`].
 */
char *rc_decomposition_render(const struct RcDecomposition *d, enum RcFormat format);

/*
 Checks the decomposition of `sys` by enumerating points over GF(prime)
 and stores the verdict in `*passed`.

 # Safety
 `sys` and `d` must be live handles, `d` computed from `sys`, and `passed`
 a valid pointer.
 */
enum RcStatus rc_decomposition_verify(const struct RcSystem *sys,
                                      const struct RcDecomposition *d,
                                      uint64_t prime,
                                      bool *passed);

/*
 # Safety
 `d` must be null or a handle from [`rc_solve`] not freed before.
 */
void rc_decomposition_free(struct RcDecomposition *d);

/*
 # Safety
 `s` must be null or a string returned by this library not freed before.
 */
void rc_string_free(char *s);

/*
 Message of the last failed call on this thread, or null after a success.
 The pointer stays valid until the next call into the library on the same
 thread.
 */
const char *rc_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* REGCHAINS_H */
