#ifndef HADLAB_H
#define HADLAB_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum HlStatus {
  HL_STATUS_OK = 0,
  HL_STATUS_NULL_ARGUMENT = 1,
  HL_STATUS_INVALID_UTF8 = 2,
  HL_STATUS_MALFORMED = 3,
  HL_STATUS_TOO_LARGE = 4,
  HL_STATUS_INVALID_ARGUMENT = 5,
  HL_STATUS_CLASS_VIOLATION = 6,
  HL_STATUS_STRUCTURE_FALLTHROUGH = 7,
  HL_STATUS_INTERNAL = 8,
  HL_STATUS_PANIC = 9,
} HlStatus;

typedef enum HlModelMode {
  HL_MODEL_MODE_SMALL = 0,
  HL_MODEL_MODE_SEMISMALL = 1,
} HlModelMode;

/**
 * Opaque graph handle.
 */
typedef struct HlGraph HlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 record into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum HlStatus hl_graph_from_graph6(const char *text, struct HlGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from `hl_graph_from_graph6` not yet freed.
 */
void hl_graph_free(struct HlGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t hl_graph_vertex_count(const struct HlGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_graph_to_graph6(const struct HlGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hl_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_clique_number(const struct HlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_chromatic_number(const struct HlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_had2(const struct HlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_had2_plus(const struct HlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_hadwiger_number(const struct HlGraph *g, size_t *out);

/**
 * Largest clique minor with branch sets of at most `m` vertices; `m >= 1`.
 *
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_had_m(const struct HlGraph *g, size_t m, size_t *out);

/**
 * Membership in the class named `class`, e.g. `"coclaw-cogem-free"`.
 *
 * # Safety
 * `g` must be a live handle, `class` a NUL-terminated string and `out` a
 * writable pointer.
 */
enum HlStatus hl_in_class(const struct HlGraph *g, const char *class_, bool *out);

/**
 * Builds a model and stores its certificate as JSON in `*out`. When the
 * input is outside the class the status is `ClassViolation` and the last
 * error message names the forbidden structure.
 *
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum HlStatus hl_construct_model(const struct HlGraph *g, enum HlModelMode mode, char **out);

/**
 * Checks a model given as a JSON array of branch sets against `g`.
 *
 * # Safety
 * `g` must be a live handle, `model_json` a NUL-terminated string and
 * `out_valid` a writable pointer.
 */
enum HlStatus hl_verify_model_json(const struct HlGraph *g,
                                   const char *model_json,
                                   bool *out_valid);

/**
 * Re-checks a certificate from its own graph6 string and witness.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out_verified` a writable
 * pointer.
 */
enum HlStatus hl_recheck_certificate_json(const char *json, bool *out_verified);

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. Valid until the next call into the library on this thread.
 */
const char *hl_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HADLAB_H */
