#ifndef EPGRAPH_H
#define EPGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  EP_STATUS_OK = 0,
  EP_STATUS_NULL_POINTER = 1,
  EP_STATUS_INVALID_UTF8 = 2,
  EP_STATUS_PARSE = 3,
  EP_STATUS_INVALID_SPEC = 4,
  EP_STATUS_NOT_A_GROUP = 5,
  EP_STATUS_NOT_NILPOTENT = 6,
  EP_STATUS_BUDGET_EXCEEDED = 7,
  EP_STATUS_OVERFLOW = 8,
  EP_STATUS_INVALID_ARGUMENT = 9,
  EP_STATUS_IO = 10,
  EP_STATUS_PANIC = 11,
} EpStatus;

typedef enum {
  EP_GRAPH_KIND_ENHANCED = 0,
  EP_GRAPH_KIND_POWER = 1,
  EP_GRAPH_KIND_COMMUTING = 2,
  EP_GRAPH_KIND_DELETED = 3,
  EP_GRAPH_KIND_PROPER = 4,
} EpGraphKind;

typedef enum {
  EP_METHOD_FORMULA = 0,
  EP_METHOD_ORACLE = 1,
  EP_METHOD_BOTH = 2,
} EpMethod;

/**
 * Opaque simple graph.
 */
typedef struct EpGraph EpGraph;

/**
 * Opaque finite group.
 */
typedef struct EpGroup EpGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ep_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *ep_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed at most once.
 */
void ep_string_free(char *s);

/**
 * Parses and builds a group from spec text such as `"Z3 x Q8"`.
 *
 * # Safety
 * `spec` must be a nul-terminated string; `out` must be writable.
 */
EpStatus ep_group_new(const char *spec, EpGroup **out);

/**
 * # Safety
 * `g` must be null or a handle from [`ep_group_new`], freed at most once.
 */
void ep_group_free(EpGroup *g);

/**
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_group_order(const EpGroup *g, uint64_t *out);

/**
 * Canonical rendering of the group's spec; free with [`ep_string_free`].
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_group_spec(const EpGroup *g, char **out);

/**
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_group_is_nilpotent(const EpGroup *g, bool *out);

/**
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_group_graph(const EpGroup *g, EpGraphKind kind, EpGraph **out);

/**
 * Connectivity of the enhanced power graph by the nilpotent-group formula.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_kappa_formula(const EpGroup *g, uint64_t *out);

/**
 * Formula-versus-oracle report as a JSON object; free with
 * [`ep_string_free`].
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
EpStatus ep_kappa_report_json(const EpGroup *g, EpMethod method, size_t budget, char **out);

/**
 * # Safety
 * `g` must be null or a handle from [`ep_group_graph`], freed at most once.
 */
void ep_graph_free(EpGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
EpStatus ep_graph_vertex_count(const EpGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
EpStatus ep_graph_edge_count(const EpGraph *g, size_t *out);

/**
 * Whether vertices `u` and `v` are adjacent; out-of-range vertices are an
 * invalid argument.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
EpStatus ep_graph_has_edge(const EpGraph *g, size_t u, size_t v, bool *out);

/**
 * Exact vertex connectivity by max-flow.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
EpStatus ep_graph_vertex_connectivity(const EpGraph *g, size_t *out);

/**
 * `{"n", "labels", "edges"}` JSON; free with [`ep_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
EpStatus ep_graph_to_json(const EpGraph *g, char **out);

/**
 * Graphviz DOT; free with [`ep_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle, `name` a nul-terminated string, and
 * `out` writable.
 */
EpStatus ep_graph_to_dot(const EpGraph *g, const char *name, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EPGRAPH_H */
