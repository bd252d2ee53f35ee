#ifndef ARGKIT_H
#define ARGKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ArgkitStatus {
  ARGKIT_STATUS_OK = 0,
  ARGKIT_STATUS_USAGE = 1,
  ARGKIT_STATUS_PARSE = 2,
  ARGKIT_STATUS_CAPACITY = 3,
  ARGKIT_STATUS_IO = 4,
  ARGKIT_STATUS_NULL_POINTER = 5,
  ARGKIT_STATUS_INVALID_UTF8 = 6,
  ARGKIT_STATUS_PANIC = 7,
} ArgkitStatus;

/**
 * Opaque framework handle.
 */
typedef struct ArgkitFramework ArgkitFramework;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *argkit_last_error(void);

/**
 * Parses APX text into a new framework handle.
 *
 * # Safety
 * `apx` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ArgkitStatus argkit_framework_from_apx(const char *apx, struct ArgkitFramework **out);

/**
 * Parses TGF text into a new framework handle.
 *
 * # Safety
 * `tgf` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ArgkitStatus argkit_framework_from_tgf(const char *tgf, struct ArgkitFramework **out);

/**
 * Releases a framework handle. NULL is ignored.
 *
 * # Safety
 * `framework` must come from this library and not be used afterwards.
 */
void argkit_framework_free(struct ArgkitFramework *framework);

/**
 * Number of arguments, 0 for NULL.
 *
 * # Safety
 * `framework` must be NULL or a live handle.
 */
size_t argkit_framework_len(const struct ArgkitFramework *framework);

/**
 * Canonical APX text of a framework.
 *
 * # Safety
 * `framework` must be a live handle and `out` a valid pointer.
 */
enum ArgkitStatus argkit_framework_to_apx(const struct ArgkitFramework *framework, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void argkit_string_free(char *s);

/**
 * All extensions under `semantics` (`cf`, `naive`, `adm`, `stb`, `com`,
 * `grd`, `prf`, `stg`, `sem`), one `[a,b]` line each.
 *
 * # Safety
 * `framework` must be a live handle, `semantics` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum ArgkitStatus argkit_extensions(const struct ArgkitFramework *framework,
                                    const char *semantics,
                                    char **out);

/**
 * Credulous (`skeptical == false`) or skeptical acceptance of `argument`.
 *
 * # Safety
 * `framework` must be a live handle, the strings NUL-terminated and `out` a
 * valid pointer.
 */
enum ArgkitStatus argkit_accept(const struct ArgkitFramework *framework,
                                const char *semantics,
                                const char *argument,
                                bool skeptical,
                                bool *out);

/**
 * Membership in `graph_class` (`acy`, `noeven`, `bip`, `sym`).
 *
 * # Safety
 * `framework` must be a live handle, `graph_class` NUL-terminated and `out` valid.
 */
enum ArgkitStatus argkit_is_member(const struct ArgkitFramework *framework,
                                   const char *graph_class,
                                   bool *out);

/**
 * Exact distance to `graph_class`; `out_set` receives the certificate as `[a,b]`.
 *
 * # Safety
 * `framework` must be a live handle, `graph_class` NUL-terminated and both out
 * pointers valid.
 */
enum ArgkitStatus argkit_distance(const struct ArgkitFramework *framework,
                                  const char *graph_class,
                                  size_t *out_k,
                                  char **out_set);

/**
 * Builds reduction `reduction` (1 to 6) from QDIMACS text, or from DIMACS
 * text plus `target` for reduction 5. `variant` is `literal` or
 * `repaired`; NULL selects `repaired`.
 *
 * # Safety
 * `input` must be NUL-terminated, `variant` and `target` NULL or
 * NUL-terminated, and `out` valid.
 */
enum ArgkitStatus argkit_reduce(const char *input,
                                uint8_t reduction,
                                const char *variant,
                                const char *target,
                                struct ArgkitFramework **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARGKIT_H */
