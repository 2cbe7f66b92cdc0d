//! Online vertex insertion: place one new vertex at the position of minimum
//! additional ink, and the drawing driver that builds a full layout this way.
//!
//! Inserting a vertex at axis position `i` (of `1..=n+1`) shifts every
//! existing coordinate `>= i` up by one and claims `i` for the new vertex.
//! The additional ink on the x-axis decomposes into three nonnegative parts:
//!
//! * **stretch**: every horizontal segment whose span strictly crosses the
//!   new column gets one unit longer;
//! * **incoming**: the new vertex's own row carries the horizontal legs of
//!   its incoming edges, costing the coordinate range of the in-neighbors
//!   together with the vertex itself;
//! * **outgoing**: each outgoing edge lands on its head's row, extending
//!   that row's existing span by the distance from the insertion point to
//!   the nearer end (zero if the point falls inside the span).
//!
//! The y-axis is the mirror image: spans are column extents, the range term
//! runs over out-neighbors (the new vertex's column carries its outgoing
//! vertical legs), and the span-extension term over in-neighbors' columns.
//! Each per-axis choice is optimal among all drawings extending the current
//! one, and all three component profiles are computed for every position in
//! one O(n) pass per axis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{bfs_order, DirectedGraph};
use crate::layout::{extents, Axis, Layout};
use crate::{Error, Result};

/// Additional-ink profile of one axis for one vertex insertion.
///
/// Index `i - 1` holds the cost of insertion position `i`; all vectors have
/// length `n + 1` for a drawing of `n` vertices. `total` is the pointwise
/// sum of the three components, and `best_pos` the smallest position
/// attaining the minimum total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AddInkProfile {
    pub axis: Axis,
    pub stretch: Vec<u64>,
    pub incoming: Vec<u64>,
    pub outgoing: Vec<u64>,
    pub total: Vec<u64>,
    pub best_pos: usize,
    pub best_cost: u64,
}

/// The two per-axis profiles behind one placement decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AddInkChoice {
    pub x: AddInkProfile,
    pub y: AddInkProfile,
}

impl AddInkChoice {
    /// Total additional ink of the chosen position pair.
    pub fn cost(&self) -> u64 {
        self.x.best_cost + self.y.best_cost
    }
}

/// Elongation cost of inserting a grid line at position `i`: the number of
/// spans `(lo, hi)` that strictly cross the cut, i.e. with `lo < i <= hi`.
/// Pass row extents when inserting a column, column extents for a row.
pub fn stretch_ink(spans: &[(usize, usize)], i: usize) -> Result<u64> {
    check_position(i, spans.len() + 1)?;
    Ok(spans.iter().filter(|&&(lo, hi)| lo < i && i <= hi).count() as u64)
}

/// Ink on the new vertex's own exclusive grid line when inserted at `i`:
/// the coordinate range of `coords` (shifted by the insertion) together
/// with `i` itself. Zero when `coords` is empty. On the x-axis `coords` are
/// the in-neighbors' columns; on the y-axis the out-neighbors' rows.
pub fn incoming_ink(coords: &[usize], i: usize) -> u64 {
    let (Some(&lo), Some(&hi)) = (coords.iter().min(), coords.iter().max()) else {
        return 0;
    };
    // Shifting preserves order, so only the extremes matter.
    let lo = if lo >= i { lo + 1 } else { lo };
    let hi = if hi >= i { hi + 1 } else { hi };
    (hi.max(i) - lo.min(i)) as u64
}

/// Cost of extending the neighbors' existing spans to reach position `i`:
/// for each span `(lo, hi)` (shifted by the insertion), zero if `i` falls
/// inside it, otherwise the distance to the nearer end. On the x-axis pass
/// the out-neighbors' row extents; on the y-axis the in-neighbors' column
/// extents.
pub fn outgoing_ink(spans: &[(usize, usize)], i: usize) -> u64 {
    spans
        .iter()
        .map(|&(lo, hi)| {
            let lo = if lo >= i { lo + 1 } else { lo };
            let hi = if hi >= i { hi + 1 } else { hi };
            if lo <= i && i <= hi {
                0
            } else {
                (i.abs_diff(lo)).min(i.abs_diff(hi)) as u64
            }
        })
        .sum()
}

fn check_position(i: usize, max: usize) -> Result<()> {
    if i < 1 || i > max {
        return Err(Error::PositionOutOfRange {
            pos: i as i64,
            max: max as i64,
        });
    }
    Ok(())
}

/// All stretch costs at once: positions `1..=t+1` for `t` spans, one
/// difference-array pass.
fn stretch_sweep(spans: &[(usize, usize)]) -> Vec<u64> {
    let m = spans.len() + 1;
    let mut diff = vec![0i64; m + 2];
    for &(lo, hi) in spans {
        if lo < hi {
            // Positions lo+1 ..= hi cross the span.
            diff[lo + 1] += 1;
            diff[hi + 1] -= 1;
        }
    }
    let mut out = Vec::with_capacity(m);
    let mut running = 0i64;
    for &step in diff.iter().skip(1).take(m) {
        running += step;
        out.push(running as u64);
    }
    out
}

/// All range costs at once, from the piecewise-linear closed form: falling
/// toward the neighbors' band, constant across it, rising past it.
fn range_sweep(coords: &[usize], m: usize) -> Vec<u64> {
    let (Some(&lo), Some(&hi)) = (coords.iter().min(), coords.iter().max()) else {
        return vec![0; m];
    };
    (1..=m)
        .map(|i| {
            if i <= lo {
                (hi + 1 - i) as u64
            } else if i <= hi {
                (hi + 1 - lo) as u64
            } else {
                (i - lo) as u64
            }
        })
        .collect()
}

/// All span-extension costs at once: one left-to-right pass accumulating
/// spans ended to the left, one right-to-left pass for spans starting to
/// the right.
fn extend_sweep(spans: &[(usize, usize)], m: usize) -> Vec<u64> {
    let mut ends = vec![0u64; m + 1];
    let mut starts = vec![0u64; m + 1];
    for &(lo, hi) in spans {
        starts[lo] += 1;
        ends[hi] += 1;
    }
    let mut out = vec![0u64; m];
    let mut open = 0u64;
    let mut acc = 0u64;
    for i in 2..=m {
        open += ends[i - 1];
        acc += open;
        out[i - 1] += acc;
    }
    let mut open = 0u64;
    let mut acc = 0u64;
    for i in (1..m).rev() {
        open += starts[i];
        acc += open;
        out[i - 1] += acc;
    }
    out
}

/// Builds the full additional-ink profile of one axis. `spans` are the
/// extents of every placed vertex on this axis, `range_coords` the
/// coordinates feeding the new vertex's own grid line, `ext_spans` the
/// extents the new vertex's edges must reach.
fn axis_profile(
    axis: Axis,
    spans: &[(usize, usize)],
    range_coords: &[usize],
    ext_spans: &[(usize, usize)],
) -> AddInkProfile {
    let m = spans.len() + 1;
    let stretch = stretch_sweep(spans);
    let incoming = range_sweep(range_coords, m);
    let outgoing = extend_sweep(ext_spans, m);
    let total: Vec<u64> = (0..m)
        .map(|k| stretch[k] + incoming[k] + outgoing[k])
        .collect();
    let best_idx = total
        .iter()
        .enumerate()
        .min_by_key(|&(_, c)| c)
        .map(|(k, _)| k)
        .unwrap();
    AddInkProfile {
        axis,
        best_pos: best_idx + 1,
        best_cost: total[best_idx],
        stretch,
        incoming,
        outgoing,
        total,
    }
}

/// Places one new vertex into an existing drawing at the per-axis positions
/// of minimum additional ink (smallest position on ties). `out_nb` and
/// `in_nb` are the new vertex's neighbors in `g`; the returned layout is
/// for `g.add_vertex(out_nb, in_nb)` with the new vertex as index `n`, and
/// its ink exceeds the old drawing's by exactly [`AddInkChoice::cost`].
pub fn opt_add_vertex(
    g: &DirectedGraph,
    layout: &Layout,
    out_nb: &[usize],
    in_nb: &[usize],
) -> Result<(Layout, AddInkChoice)> {
    let n = g.vertex_count();
    if layout.vertex_count() != n {
        return Err(Error::LayoutMismatch {
            got: layout.vertex_count(),
            want: n,
        });
    }
    if !layout.is_contiguous() {
        return Err(Error::NotContiguous);
    }
    for &u in out_nb.iter().chain(in_nb) {
        if u >= n {
            return Err(Error::VertexOutOfRange(u, n));
        }
    }
    let mut out_nb = out_nb.to_vec();
    let mut in_nb = in_nb.to_vec();
    out_nb.sort_unstable();
    out_nb.dedup();
    in_nb.sort_unstable();
    in_nb.dedup();

    let (row, col) = extents(g, layout)?;
    let row_spans: Vec<(usize, usize)> = (0..n).map(|v| (row.w[v], row.e[v])).collect();
    let col_spans: Vec<(usize, usize)> = (0..n).map(|v| (col.s[v], col.n[v])).collect();

    let in_xs: Vec<usize> = in_nb.iter().map(|&u| layout.x(u)).collect();
    let out_row_spans: Vec<(usize, usize)> = out_nb.iter().map(|&u| row_spans[u]).collect();
    let px = axis_profile(Axis::X, &row_spans, &in_xs, &out_row_spans);

    let out_ys: Vec<usize> = out_nb.iter().map(|&u| layout.y(u)).collect();
    let in_col_spans: Vec<(usize, usize)> = in_nb.iter().map(|&u| col_spans[u]).collect();
    let py = axis_profile(Axis::Y, &col_spans, &out_ys, &in_col_spans);

    let grown = layout.inserted(px.best_pos, py.best_pos)?;
    Ok((grown, AddInkChoice { x: px, y: py }))
}

/// One row of the per-insertion trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionStep {
    /// Vertex placed at this step (original graph index).
    pub vertex: usize,
    /// Chosen column and row positions at insertion time.
    pub x_pos: usize,
    pub y_pos: usize,
    /// Additional ink paid on each axis.
    pub add_ink_x: u64,
    pub add_ink_y: u64,
    /// Running total after the step.
    pub ink_after: u64,
}

/// Expands one run seed into the `(start, order_seed)` pair consumed by
/// [`incremental_draw`]. The CLI, the benchmark harness, and the C ABI all
/// share this expansion, so equal seeds reproduce equal drawings. `n` must
/// be at least 1.
pub fn expand_run_seed(n: usize, seed: u64) -> (usize, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = rng.random_range(0..n);
    (start, rng.random::<u64>())
}

/// Draws `g` by inserting vertices one at a time in a randomized BFS order
/// from `start`, each at its per-axis minimum-additional-ink position. The
/// first vertex lands at `(1, 1)`; the result is contiguous on the
/// `n x n` grid. Deterministic for fixed `(start, order_seed)`.
pub fn incremental_draw(g: &DirectedGraph, start: usize, order_seed: u64) -> Result<Layout> {
    incremental_draw_traced(g, start, order_seed).map(|(layout, _)| layout)
}

/// As [`incremental_draw`], also returning the insertion order and costs.
pub fn incremental_draw_traced(
    g: &DirectedGraph,
    start: usize,
    order_seed: u64,
) -> Result<(Layout, Vec<InsertionStep>)> {
    let order = bfs_order(g, start, order_seed)?;
    let n = g.vertex_count();
    let mut x = vec![0usize; n];
    let mut y = vec![0usize; n];
    // Row extent [w, e] and column extent [s, t] of each placed vertex,
    // maintained across insertions instead of recomputed.
    let mut w = vec![0usize; n];
    let mut e = vec![0usize; n];
    let mut s = vec![0usize; n];
    let mut t = vec![0usize; n];
    let mut placed = vec![false; n];
    let mut placed_order: Vec<usize> = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);
    let mut ink = 0u64;

    for &v in &order {
        if placed_order.is_empty() {
            x[v] = 1;
            y[v] = 1;
            (w[v], e[v], s[v], t[v]) = (1, 1, 1, 1);
            placed[v] = true;
            placed_order.push(v);
            steps.push(InsertionStep {
                vertex: v,
                x_pos: 1,
                y_pos: 1,
                add_ink_x: 0,
                add_ink_y: 0,
                ink_after: 0,
            });
            continue;
        }

        let row_spans: Vec<(usize, usize)> = placed_order.iter().map(|&j| (w[j], e[j])).collect();
        let col_spans: Vec<(usize, usize)> = placed_order.iter().map(|&j| (s[j], t[j])).collect();
        let placed_in: Vec<usize> = g
            .in_neighbors(v)
            .iter()
            .copied()
            .filter(|&u| placed[u])
            .collect();
        let placed_out: Vec<usize> = g
            .out_neighbors(v)
            .iter()
            .copied()
            .filter(|&u| placed[u])
            .collect();

        let in_xs: Vec<usize> = placed_in.iter().map(|&u| x[u]).collect();
        let out_row_spans: Vec<(usize, usize)> = placed_out.iter().map(|&u| (w[u], e[u])).collect();
        let px = axis_profile(Axis::X, &row_spans, &in_xs, &out_row_spans);

        let out_ys: Vec<usize> = placed_out.iter().map(|&u| y[u]).collect();
        let in_col_spans: Vec<(usize, usize)> = placed_in.iter().map(|&u| (s[u], t[u])).collect();
        let py = axis_profile(Axis::Y, &col_spans, &out_ys, &in_col_spans);

        let (ix, iy) = (px.best_pos, py.best_pos);
        for &j in &placed_order {
            if x[j] >= ix {
                x[j] += 1;
            }
            if w[j] >= ix {
                w[j] += 1;
            }
            if e[j] >= ix {
                e[j] += 1;
            }
            if y[j] >= iy {
                y[j] += 1;
            }
            if s[j] >= iy {
                s[j] += 1;
            }
            if t[j] >= iy {
                t[j] += 1;
            }
        }
        x[v] = ix;
        y[v] = iy;
        (w[v], e[v], s[v], t[v]) = (ix, ix, iy, iy);
        for &u in &placed_in {
            // Edge (u, v): horizontal leg on v's row, vertical on u's column.
            w[v] = w[v].min(x[u]);
            e[v] = e[v].max(x[u]);
            s[u] = s[u].min(iy);
            t[u] = t[u].max(iy);
        }
        for &u in &placed_out {
            // Edge (v, u): vertical leg on v's column, horizontal on u's row.
            s[v] = s[v].min(y[u]);
            t[v] = t[v].max(y[u]);
            w[u] = w[u].min(ix);
            e[u] = e[u].max(ix);
        }
        placed[v] = true;
        placed_order.push(v);
        ink += px.best_cost + py.best_cost;
        steps.push(InsertionStep {
            vertex: v,
            x_pos: ix,
            y_pos: iy,
            add_ink_x: px.best_cost,
            add_ink_y: py.best_cost,
            ink_after: ink,
        });
    }

    Ok((Layout::new(x, y)?, steps))
}
