#ifndef LMDIM_H
#define LMDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum LmdStatus {
  LMD_STATUS_OK = 0,
  LMD_STATUS_NULL_POINTER = 1,
  LMD_STATUS_INVALID_UTF8 = 2,
  LMD_STATUS_INVALID_GRAPH = 3,
  LMD_STATUS_INVALID_SUBSET = 4,
  LMD_STATUS_NO_GENERATOR = 5,
  LMD_STATUS_PRECONDITION_VIOLATED = 6,
  LMD_STATUS_INSTANCE_TOO_LARGE = 7,
  LMD_STATUS_BAD_PARAMETER = 8,
  LMD_STATUS_FORMAT = 9,
  LMD_STATUS_PANIC = 10,
} LmdStatus;

/**
 * Values accepted by the `kind` argument of [`lmd_find_dimension`].
 */
typedef enum LmdKind {
  LMD_KIND_METRIC = 0,
  LMD_KIND_LOCAL = 1,
  LMD_KIND_U_LOCAL = 2,
} LmdKind;

/**
 * Opaque result of a dimension search.
 */
typedef struct LmdDimension LmdDimension;

/**
 * Opaque graph handle.
 */
typedef struct LmdGraph LmdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *lmd_last_error_message(void);

/**
 * Parses a graph document (`{"n": .., "edges": [..]}`).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum LmdStatus lmd_graph_from_json(const char *json, struct LmdGraph **out);

/**
 * Builds an unweighted graph on `n` vertices from `m` edges given as
 * `2 * m` endpoint ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be NULL when `m` is
 * 0) and `out` must be writable.
 */
enum LmdStatus lmd_graph_from_edges(size_t n, const size_t *edges, size_t m, struct LmdGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void lmd_graph_free(struct LmdGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t lmd_graph_order(const struct LmdGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t lmd_graph_size(const struct LmdGraph *g);

/**
 * Serializes `g`. Release the string with [`lmd_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum LmdStatus lmd_graph_to_json(const struct LmdGraph *g, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void lmd_string_free(char *s);

/**
 * Exact dimension of `g`. `kind` is an [`LmdKind`] value; `u` and `u_len`
 * give the root set for `LMD_KIND_U_LOCAL` and are ignored otherwise.
 * `threads` is 1 for a sequential search, 0 for every core.
 *
 * # Safety
 * `g` must be a live handle, `u` must point to `u_len` readable values
 * when used, and `out` must be writable.
 */
enum LmdStatus lmd_find_dimension(const struct LmdGraph *g,
                                  uint32_t kind,
                                  const size_t *u,
                                  size_t u_len,
                                  size_t threads,
                                  struct LmdDimension **out);

/**
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t lmd_dimension_value(const struct LmdDimension *d);

/**
 * The lexicographically least basis. Writes its length to `len` and returns
 * a pointer owned by `d`.
 *
 * # Safety
 * `d` must be a live handle and `len` writable.
 */
const size_t *lmd_dimension_basis(const struct LmdDimension *d, size_t *len);

/**
 * # Safety
 * `d` must be NULL or a handle not yet freed.
 */
void lmd_dimension_free(struct LmdDimension *d);

/**
 * G(U) ⊓ H with product vertex `(g, h)` at id `g * n(H) + h`.
 *
 * # Safety
 * `g` and `h` must be live handles, `u` must point to `u_len` readable
 * values, and `out` must be writable.
 */
enum LmdStatus lmd_hierarchical_product(const struct LmdGraph *g,
                                        const size_t *u,
                                        size_t u_len,
                                        const struct LmdGraph *h,
                                        struct LmdGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LMDIM_H */
