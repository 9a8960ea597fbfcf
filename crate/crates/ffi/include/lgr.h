#ifndef LGR_H
#define LGR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum LgrStatus {
  LGR_STATUS_OK = 0,
  LGR_STATUS_NULL_POINTER = 1,
  LGR_STATUS_INVALID_UTF8 = 2,
  LGR_STATUS_PARSE = 3,
  LGR_STATUS_NOT_SYMMETRIC = 4,
  LGR_STATUS_DIMENSION = 5,
  LGR_STATUS_INVALID_ARGUMENT = 6,
  LGR_STATUS_EVALUATION = 7,
  LGR_STATUS_PANIC = 8,
} LgrStatus;

/**
 * A square rational matrix.
 */
typedef struct LgrMatrix LgrMatrix;

/**
 * A polynomial τ-function together with the plane it came from.
 */
typedef struct LgrTau LgrTau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *lgr_last_error(void);

/**
 * Library version as a static string.
 */
const char *lgr_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lgr_string_free(char *s);

/**
 * Parses a JSON array of rows, entries as integers or `"p/q"` strings.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum LgrStatus lgr_matrix_from_json(const char *json, struct LgrMatrix **out);

/**
 * # Safety
 * `m` must come from [`lgr_matrix_from_json`] and not have been freed. Null is ignored.
 */
void lgr_matrix_free(struct LgrMatrix *m);

/**
 * Side length of a matrix, 0 for null.
 *
 * # Safety
 * `m` must be a live handle or null.
 */
size_t lgr_matrix_size(const struct LgrMatrix *m);

/**
 * All principal minors as a JSON object keyed by subset (`""`, `"1"`, ..., `"12...N"`).
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable. Free the result with [`lgr_string_free`].
 */
enum LgrStatus lgr_principal_minors_json(const struct LgrMatrix *m, char **out);

/**
 * Sets `*pass` to whether every core hyperdeterminantal relation holds for the minors of `m`.
 *
 * # Safety
 * `m` must be a live handle; `pass` must be writable.
 */
enum LgrStatus lgr_check_hyperdet(const struct LgrMatrix *m, bool *pass);

/**
 * τ of the big-cell plane with affine coordinates `m`; CKP exactly when `m` is symmetric.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum LgrStatus lgr_tau_from_matrix(const struct LgrMatrix *m, struct LgrTau **out);

/**
 * Parses `{"n", "m", "plucker": [{"lambda", "c"}, ...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum LgrStatus lgr_tau_from_json(const char *json, struct LgrTau **out);

/**
 * # Safety
 * `t` must come from this library and not have been freed. Null is ignored.
 */
void lgr_tau_free(struct LgrTau *t);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable. Free the result with [`lgr_string_free`].
 */
enum LgrStatus lgr_tau_to_json(const struct LgrTau *t, char **out);

/**
 * `τ(t_1, ..., t_len)` with the times given as `"p/q"` strings.
 *
 * # Safety
 * `times` must point to `len` nul-terminated strings (or be null with `len == 0`);
 * `out` must be writable. Free the result with [`lgr_string_free`].
 */
enum LgrStatus lgr_tau_eval(const struct LgrTau *t,
                            const char *const *times,
                            size_t len,
                            char **out);

/**
 * Sets `*pass` to whether τ is even under `t_2k -> -t_2k` with vanishing even derivatives.
 *
 * # Safety
 * `t` must be a live handle; `pass` must be writable.
 */
enum LgrStatus lgr_tau_is_ckp(const struct LgrTau *t, bool *pass);

/**
 * Runs the `lgr` command line with `argv[0..argc]` and returns its exit code.
 *
 * # Safety
 * `argv` must point to `argc` nul-terminated strings.
 */
int lgr_cli_main(int argc, const char *const *argv);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LGR_H */
