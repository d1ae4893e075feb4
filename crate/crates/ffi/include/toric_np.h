#ifndef TORIC_NP_H
#define TORIC_NP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible function.
 */
typedef enum TnpStatus {
  TNP_STATUS_OK = 0,
  TNP_STATUS_NULL_POINTER = 1,
  TNP_STATUS_INVALID_UTF8 = 2,
  TNP_STATUS_PARSE = 3,
  /**
   * Characteristic that is neither 0 nor a prime, or a non-convex
   * polyomino.
   */
  TNP_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The graph has no cycle; its toric ideal is zero and has no level.
   */
  TNP_STATUS_ZERO_IDEAL = 5,
  /**
   * A divisor complex exceeded the face cap.
   */
  TNP_STATUS_RESOURCE_LIMIT = 6,
  TNP_STATUS_INTERNAL = 7,
  TNP_STATUS_PANIC = 8,
} TnpStatus;

/**
 * Green–Lazarsfeld level, ordered.
 */
typedef enum TnpLevel {
  TNP_LEVEL_FAILS_N1 = 1,
  TNP_LEVEL_N1 = 2,
  TNP_LEVEL_N2 = 3,
  TNP_LEVEL_N3 = 4,
  TNP_LEVEL_N_INF = 5,
} TnpLevel;

/**
 * Opaque bipartite graph.
 */
typedef struct TnpGraph TnpGraph;

/**
 * Opaque polyomino.
 */
typedef struct TnpPolyomino TnpPolyomino;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or an empty string.
 * Valid until the next failing call on the same thread.
 */
const char *tnp_last_error_message(void);

/**
 * Engine version as a static NUL-terminated string.
 */
const char *tnp_version(void);

/**
 * Parses a graph in the text or JSON input format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TnpStatus tnp_graph_parse(const char *text, struct TnpGraph **out);

/**
 * `K_{m,n}` with labels `x1..xm`, `y1..yn`.
 */
struct TnpGraph *tnp_graph_complete(size_t m, size_t n);

/**
 * # Safety
 * `g` must come from this library and not have been freed; null is ignored.
 */
void tnp_graph_free(struct TnpGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which gives 0).
 */
size_t tnp_graph_num_vertices(const struct TnpGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which gives 0).
 */
size_t tnp_graph_num_edges(const struct TnpGraph *g);

/**
 * Level of `I_G` over the field of the given characteristic.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum TnpStatus tnp_classify(const struct TnpGraph *g, uint32_t characteristic, enum TnpLevel *out);

/**
 * Full verdict with certificate as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum TnpStatus tnp_classify_json(const struct TnpGraph *g, uint32_t characteristic, char **out);

/**
 * `β_{i,j}(I_G)`. A `face_cap` of 0 means no cap.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum TnpStatus tnp_betti_number(const struct TnpGraph *g,
                                size_t i,
                                size_t j,
                                uint32_t characteristic,
                                uint64_t face_cap,
                                uint64_t *out);

/**
 * Windowed Betti table as JSON. A `face_cap` of 0 means no cap.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum TnpStatus tnp_betti_table_json(const struct TnpGraph *g,
                                    size_t i_max,
                                    size_t j_max,
                                    uint32_t characteristic,
                                    uint64_t face_cap,
                                    char **out);

/**
 * Parses a polyomino from ASCII art or JSON.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TnpStatus tnp_polyomino_parse(const char *text, struct TnpPolyomino **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed; null is ignored.
 */
void tnp_polyomino_free(struct TnpPolyomino *p);

/**
 * Level of the polyomino ideal; non-convex input gives
 * `TNP_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TnpStatus tnp_polyomino_classify(const struct TnpPolyomino *p,
                                      uint32_t characteristic,
                                      enum TnpLevel *out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tnp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_NP_H */
