/* C ABI for latticelab. Generated; do not edit. */

#ifndef LATTICELAB_H
#define LATTICELAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum LlStatus {
  LlOk = 0,
  /**
   * The input is structurally well-formed but semantically invalid.
   */
  LlValidation = 1,
  /**
   * A configured budget was exceeded.
   */
  LlBudget = 2,
  /**
   * The input could not be parsed.
   */
  LlParse = 3,
  /**
   * A required pointer argument was null.
   */
  LlNullPointer = 4,
} LlStatus;

/**
 * Opaque lattice handle. Created by `ll_lattice_from_json` or
 * `ll_gallery`; released with `ll_lattice_free`.
 */
typedef struct LlLattice LlLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ll_version(void);

/**
 * Parses a `lattice-v1` JSON document into a lattice handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum LlStatus ll_lattice_from_json(const char *json, struct LlLattice **out);

/**
 * Builds a stock lattice. `kind` is one of "chain", "mn", "boolean", "mo",
 * "n5"; `param` is the size / atom count / pair count (ignored for "n5").
 *
 * # Safety
 * `kind` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum LlStatus ll_gallery(const char *kind, uintptr_t param, struct LlLattice **out);

/**
 * Releases a lattice handle. Null is ignored.
 *
 * # Safety
 * `lattice` must be null or a handle produced by this library that has not
 * been freed yet.
 */
void ll_lattice_free(struct LlLattice *lattice);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `lattice` must be null or a live handle.
 */
uintptr_t ll_lattice_len(const struct LlLattice *lattice);

/**
 * Order test: writes 1 to `out` when a <= b, else 0.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LlStatus ll_lattice_leq(const struct LlLattice *lattice,
                             uintptr_t a,
                             uintptr_t b,
                             uintptr_t *out);

/**
 * Greatest lower bound.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LlStatus ll_lattice_meet(const struct LlLattice *lattice,
                              uintptr_t a,
                              uintptr_t b,
                              uintptr_t *out);

/**
 * Least upper bound.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LlStatus ll_lattice_join(const struct LlLattice *lattice,
                              uintptr_t a,
                              uintptr_t b,
                              uintptr_t *out);

/**
 * Serializes the lattice back to canonical `lattice-v1` JSON. The string
 * must be released with `ll_string_free`.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LlStatus ll_lattice_to_json(const struct LlLattice *lattice, char **out);

/**
 * Runs the full analysis (width, height, distributivity, simplicity,
 * Wille's property, the completeness verdict) and returns the JSON report.
 * The string must be released with `ll_string_free`.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LlStatus ll_analyze_json(const struct LlLattice *lattice, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library, not yet freed.
 */
void ll_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LATTICELAB_H */
