#ifndef FUSIONREP_H
#define FUSIONREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum FrStatus {
  FR_STATUS_OK = 0,
  /**
   * Parse or validation error in the input.
   */
  FR_STATUS_INPUT_ERROR = 1,
  /**
   * The input is well formed but mathematically invalid.
   */
  FR_STATUS_MATH_ERROR = 2,
  /**
   * A configured size cap was exceeded.
   */
  FR_STATUS_CAP_EXCEEDED = 3,
  FR_STATUS_NULL_ARGUMENT = 4,
  FR_STATUS_INVALID_UTF8 = 5,
  FR_STATUS_PANIC = 6,
} FrStatus;

/**
 * Output format for `fr_run`.
 */
typedef enum FrFormat {
  FR_FORMAT_TEXT = 0,
  FR_FORMAT_JSON = 1,
  FR_FORMAT_DOT = 2,
} FrFormat;

/**
 * Character table, invariant basis and presentations of a job.
 */
typedef struct FrAnalysis FrAnalysis;

/**
 * A parsed and validated job.
 */
typedef struct FrJob FrJob;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a job from text. Relative paths in the job (cocycle tables,
 * name files) resolve against `base_dir`, which may be null for the
 * current directory.
 *
 * # Safety
 * `text` must be a nul-terminated string, `base_dir` null or a
 * nul-terminated string, and `out` a valid pointer.
 */
enum FrStatus fr_job_parse(const char *text, const char *base_dir, struct FrJob **out);

/**
 * Loads a job file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum FrStatus fr_job_load(const char *path, struct FrJob **out);

/**
 * # Safety
 * `job` must be null or a handle from `fr_job_parse`/`fr_job_load` not yet
 * freed.
 */
void fr_job_free(struct FrJob *job);

/**
 * Runs one of `chartable`, `fusion-classes`, `saturation`, `repring`,
 * `ktheory`, `spectrum`, `twisted`, `adic` and returns its output.
 *
 * # Safety
 * `job` must be a live handle, `command` a nul-terminated string and `out`
 * a valid pointer.
 */
enum FrStatus fr_run(const struct FrJob *job,
                     const char *command,
                     enum FrFormat format,
                     char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fr_string_free(char *s);

/**
 * Message of the last failure on this thread; empty if none. Valid until
 * the next call into the library on the same thread.
 */
const char *fr_last_error_message(void);

/**
 * # Safety
 * `job` must be a live handle and `out` a valid pointer.
 */
enum FrStatus fr_analyze(const struct FrJob *job, struct FrAnalysis **out);

/**
 * # Safety
 * `a` must be null or a handle from `fr_analyze` not yet freed.
 */
void fr_analysis_free(struct FrAnalysis *a);

/**
 * Number of irreducible invariant characters, the trivial one included.
 *
 * # Safety
 * `a` must be a live handle.
 */
size_t fr_analysis_basis_len(const struct FrAnalysis *a);

/**
 * Degree of basis element `i`, or -1 when out of range.
 *
 * # Safety
 * `a` must be a live handle.
 */
int64_t fr_analysis_degree(const struct FrAnalysis *a, size_t i);

/**
 * Name of basis element `i`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum FrStatus fr_analysis_name(const struct FrAnalysis *a, size_t i, char **out);

/**
 * The representation ring as `Z[X,…]/( … )`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum FrStatus fr_analysis_presentation(const struct FrAnalysis *a, char **out);

/**
 * The completion as `Z[[v,…]]/( … )`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum FrStatus fr_analysis_completed(const struct FrAnalysis *a, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUSIONREP_H */
