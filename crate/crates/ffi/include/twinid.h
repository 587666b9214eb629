#ifndef TWINID_H
#define TWINID_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TwinidStatus {
  TWINID_STATUS_OK = 0,
  TWINID_STATUS_NULL_POINTER = 1,
  TWINID_STATUS_INVALID_ARGUMENT = 2,
  TWINID_STATUS_PARSE_ERROR = 3,
  TWINID_STATUS_INSTANCE_TOO_LARGE = 4,
  TWINID_STATUS_INVALID_COLORING = 5,
  TWINID_STATUS_PANIC = 6,
} TwinidStatus;

typedef enum TwinidVariant {
  TWINID_VARIANT_ID = 0,
  TWINID_VARIANT_LID = 1,
  TWINID_VARIANT_RLID = 2,
} TwinidVariant;

/*
 Opaque graph handle.
 */
typedef struct TwinidGraph TwinidGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *twinid_version(void);

/*
 Message for the last failed call on this thread, or NULL. The pointer is
 valid until the next call into this library on the same thread.
 */
const char *twinid_last_error_message(void);

/*
 # Safety
 `s` must be NULL or a string returned by this library and not yet freed.
 */
void twinid_string_free(char *s);

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 `edges` (`2 * edge_count` entries).

 # Safety
 `edges` must point to `2 * edge_count` readable values (or be NULL when
 `edge_count` is 0); `out` must be writable.
 */
enum TwinidStatus twinid_graph_new(uintptr_t n,
                                   const uintptr_t *edges,
                                   uintptr_t edge_count,
                                   struct TwinidGraph **out);

/*
 Parses edge-list or DIMACS text.

 # Safety
 `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TwinidStatus twinid_graph_parse(const char *text, struct TwinidGraph **out);

/*
 # Safety
 `g` must be NULL or a handle from this library that was not yet freed.
 */
void twinid_graph_free(struct TwinidGraph *g);

/*
 Vertex count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
uintptr_t twinid_graph_vertex_count(const struct TwinidGraph *g);

/*
 Edge count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
uintptr_t twinid_graph_edge_count(const struct TwinidGraph *g);

/*
 Canonical edge-list text; free with `twinid_string_free`.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum TwinidStatus twinid_graph_to_edge_list(const struct TwinidGraph *g, char **out);

/*
 # Safety
 `out` must be writable.
 */
enum TwinidStatus twinid_gen_hp(uintptr_t p, struct TwinidGraph **out);

/*
 # Safety
 `out` must be writable.
 */
enum TwinidStatus twinid_gen_hext(uintptr_t a, struct TwinidGraph **out);

/*
 # Safety
 `out` must be writable.
 */
enum TwinidStatus twinid_gen_htt(uintptr_t p,
                                 uintptr_t big_t,
                                 uintptr_t t,
                                 struct TwinidGraph **out);

/*
 # Safety
 `out` must be writable.
 */
enum TwinidStatus twinid_gen_random(uintptr_t n,
                                    double prob,
                                    uint64_t seed,
                                    struct TwinidGraph **out);

/*
 Twin statistics. Any output pointer may be NULL. `class_of`, when given,
 receives the class index of each of the `n` vertices.

 # Safety
 `g` must be a live handle; non-NULL outputs must be writable, and
 `class_of` must have room for `twinid_graph_vertex_count(g)` entries.
 */
enum TwinidStatus twinid_twin_partition(const struct TwinidGraph *g,
                                        uintptr_t *class_count,
                                        uintptr_t *nontrivial,
                                        uintptr_t *max_class_size,
                                        uintptr_t *class_of);

/*
 Twin quotient as a new handle. `projection`, when non-NULL, receives the
 quotient vertex of each original vertex.

 # Safety
 `g` must be a live handle; `out` writable; `projection` NULL or room for
 `twinid_graph_vertex_count(g)` entries.
 */
enum TwinidStatus twinid_quotient(const struct TwinidGraph *g,
                                  struct TwinidGraph **out,
                                  uintptr_t *projection);

/*
 Checks a coloring (`len` positive colors, one per vertex).

 # Safety
 `g` must be a live handle; `colors` must hold `len` values; `valid` writable.
 */
enum TwinidStatus twinid_check_coloring(const struct TwinidGraph *g,
                                        enum TwinidVariant variant,
                                        const uint32_t *colors,
                                        uintptr_t len,
                                        bool *valid);

/*
 Exact optimum for `variant`. `colors`, when non-NULL, receives the witness.

 # Safety
 `g` must be a live handle; `optimum` writable; `colors` NULL or room for
 `twinid_graph_vertex_count(g)` entries.
 */
enum TwinidStatus twinid_solve(const struct TwinidGraph *g,
                               enum TwinidVariant variant,
                               bool force,
                               uintptr_t *optimum,
                               uint32_t *colors);

/*
 Same as `twinid_solve` but returns the full JSON report; free with
 `twinid_string_free`.

 # Safety
 `g` must be a live handle; `out` writable.
 */
enum TwinidStatus twinid_solve_json(const struct TwinidGraph *g,
                                    enum TwinidVariant variant,
                                    bool force,
                                    char **out);

/*
 Minimum twin-aware identifying code. `members`, when non-NULL, receives a
 0/1 flag per vertex.

 # Safety
 `g` must be a live handle; `size` writable; `members` NULL or room for
 `twinid_graph_vertex_count(g)` bytes.
 */
enum TwinidStatus twinid_min_identifying_code(const struct TwinidGraph *g,
                                              bool strict,
                                              bool force,
                                              uintptr_t *size,
                                              uint8_t *members);

/*
 Bounds report for `g` and its quotient as JSON; free with
 `twinid_string_free`.

 # Safety
 `g` must be a live handle; `out` writable.
 */
enum TwinidStatus twinid_verify_bounds_json(const struct TwinidGraph *g,
                                            enum TwinidVariant variant,
                                            bool force,
                                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWINID_H */
