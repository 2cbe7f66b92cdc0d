/* C ABI for the ldrawing layout engine. Generated; do not edit. */

#ifndef LDRAW_H
#define LDRAW_H

/* Regenerated by the crate build script from src/lib.rs. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Non-`Ok` values leave a human-readable
 * explanation in [`ld_last_error_message`].
 */
typedef enum {
  LD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LD_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  LD_STATUS_INVALID_UTF8 = 2,
  /**
   * Graph text could not be parsed.
   */
  LD_STATUS_PARSE_ERROR = 3,
  /**
   * Arguments were structurally invalid (mismatched sizes, bad ranges).
   */
  LD_STATUS_INVALID_INPUT = 4,
  /**
   * The requested graph cannot exist (density infeasible, disconnected).
   */
  LD_STATUS_INFEASIBLE = 5,
  /**
   * The instance exceeds an exact-method size guard.
   */
  LD_STATUS_SIZE_GUARD = 6,
  /**
   * A defect inside the library; please report the message.
   */
  LD_STATUS_INTERNAL = 7,
} LdStatus;

/**
 * Axis selector for the ILP emitter.
 */
typedef enum {
  LD_AXIS_X = 0,
  LD_AXIS_Y = 1,
} LdAxis;

/**
 * Opaque directed graph handle.
 */
typedef struct LdGraph LdGraph;

/**
 * Opaque layout handle: one exclusive grid position per vertex.
 */
typedef struct LdLayout LdLayout;

/**
 * Pixel geometry for [`ld_render_svg`]. Obtain defaults from
 * [`ld_render_style_default`] and adjust fields as needed.
 */
typedef struct {
  /**
   * Pixels per grid unit.
   */
  double cell;
  /**
   * Radius of the quarter-circle bend junctions.
   */
  double junction;
  /**
   * Radius of the vertex circles.
   */
  double vertex_radius;
  /**
   * Arrowhead length.
   */
  double arrow;
  /**
   * Stroke width of edge segments.
   */
  double stroke;
  /**
   * Label font size.
   */
  double font;
  /**
   * Draw vertex labels inside the circles.
   */
  bool labels;
} LdRenderStyle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Explains the most recent non-`Ok` status on this thread, or null before
 * the first failure. The pointer stays valid until the next failing call
 * on the same thread; do not free it.
 */
const char *ld_last_error_message(void);

/**
 * Parses edge-list or DOT digraph text into a new graph handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable. On `Ok`
 * the caller owns `*out` and releases it with [`ld_graph_free`].
 */
LdStatus ld_graph_parse(const char *text, LdGraph **out);

/**
 * Generates a random weakly connected digraph with `n` vertices and
 * `n(n-1) * density_percent / 100` edges, deterministic in `seed`.
 *
 * # Safety
 * `out` must be writable. On `Ok` the caller owns `*out` and releases it
 * with [`ld_graph_free`].
 */
LdStatus ld_graph_generate(size_t n, uint32_t density_percent, uint64_t seed, LdGraph **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be a live handle from this library or null.
 */
size_t ld_graph_vertex_count(const LdGraph *graph);

/**
 * Number of directed edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be a live handle from this library or null.
 */
size_t ld_graph_edge_count(const LdGraph *graph);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `graph` must be a handle from this library, not yet freed, or null.
 */
void ld_graph_free(LdGraph *graph);

/**
 * Draws the graph by randomized-BFS vertex insertion, each vertex at its
 * minimum-additional-ink position. Deterministic in `seed`; equal seeds
 * reproduce the CLI's `layout --seed` and the benchmark harness.
 *
 * # Safety
 * `graph` must be a live handle, `out` writable. On `Ok` the caller owns
 * `*out` and releases it with [`ld_layout_free`].
 */
LdStatus ld_layout_incremental(const LdGraph *graph, uint64_t seed, LdLayout **out);

/**
 * Computes a minimum-ink layout by per-axis dynamic programming over
 * vertex subsets. Refuses graphs past the built-in size guard unless
 * `force` is set.
 *
 * # Safety
 * `graph` must be a live handle, `out` writable. On `Ok` the caller owns
 * `*out` and releases it with [`ld_layout_free`].
 */
LdStatus ld_layout_exact(const LdGraph *graph, bool force, LdLayout **out);

/**
 * Places the vertices with uniformly random independent row and column
 * permutations, deterministic in `seed`. The baseline layouts in the
 * benchmark harness come from this generator.
 *
 * # Safety
 * `graph` must be a live handle, `out` writable. On `Ok` the caller owns
 * `*out` and releases it with [`ld_layout_free`].
 */
LdStatus ld_layout_random(const LdGraph *graph, uint64_t seed, LdLayout **out);

/**
 * Number of placed vertices, or 0 for a null handle.
 *
 * # Safety
 * `layout` must be a live handle from this library or null.
 */
size_t ld_layout_vertex_count(const LdLayout *layout);

/**
 * Reads the column and row of one vertex (1-based grid coordinates).
 *
 * # Safety
 * `layout` must be a live handle; `x` and `y` must be writable.
 */
LdStatus ld_layout_position(const LdLayout *layout, size_t vertex, size_t *x, size_t *y);

/**
 * Releases a layout handle. Null is ignored.
 *
 * # Safety
 * `layout` must be a handle from this library, not yet freed, or null.
 */
void ld_layout_free(LdLayout *layout);

/**
 * Measures the ink of a drawing: total grid length of the union of all
 * edge segments, split into horizontal and vertical contributions.
 *
 * # Safety
 * `graph` and `layout` must be live handles; the out-pointers must be
 * writable.
 */
LdStatus ld_ink(const LdGraph *graph,
                const LdLayout *layout,
                uint64_t *total,
                uint64_t *horizontal,
                uint64_t *vertical);

/**
 * The default pixel geometry used by the CLI.
 */
LdRenderStyle ld_render_style_default(void);

/**
 * Renders the drawing to SVG text. A null `style` selects the defaults.
 *
 * # Safety
 * `graph` and `layout` must be live handles; `style` must be null or point
 * to a valid style; `out` must be writable. On `Ok` the caller owns `*out`
 * and releases it with [`ld_string_free`].
 */
LdStatus ld_render_svg(const LdGraph *graph,
                       const LdLayout *layout,
                       const LdRenderStyle *style,
                       char **out);

/**
 * Writes the one-axis minimum-ink ILP in CPLEX LP text format.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable. On `Ok` the
 * caller owns `*out` and releases it with [`ld_string_free`].
 */
LdStatus ld_emit_lp(const LdGraph *graph, LdAxis axis, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `text` must be a string from this library, not yet freed, or null.
 */
void ld_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LDRAW_H */
