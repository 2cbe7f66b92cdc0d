//! Emits one axis of the ink minimization as an integer program in CPLEX
//! LP text format, for solving with an external ILP solver.
//!
//! Variables: binaries `x_i_j` (vertex `i` sits at position `j`) and
//! integer span endpoints `E_i`, `W_i` per vertex, all 1-based. The
//! constraints assign exactly one position per vertex, at most one vertex
//! per position, anchor each span at its own vertex, and force the span of
//! an edge's landing vertex to cover the other endpoint's position. The
//! objective minimizes the summed span widths, which is exactly the axis
//! ink. For the horizontal model the span of edge `(u, v)` belongs to `v`
//! (its row receives the horizontal leg); the vertical model attaches the
//! span to `u` instead.

use std::fmt::Write;

use crate::graph::DirectedGraph;
use crate::layout::Axis;

/// Renders the integer program for one axis of `g`. Output is stable:
/// fixed row order and naming for identical inputs.
pub fn emit_lp(g: &DirectedGraph, axis: Axis) -> String {
    let n = g.vertex_count();
    let mut lp = String::new();
    let direction = match axis {
        Axis::X => "horizontal",
        Axis::Y => "vertical",
    };
    let _ = writeln!(
        lp,
        "\\ Minimum {direction} ink model: {n} vertices, {} edges",
        g.edge_count()
    );

    lp.push_str("Minimize\n obj:");
    for i in 1..=n {
        if i > 1 {
            let _ = write!(lp, " + E_{i} - W_{i}");
        } else {
            let _ = write!(lp, " E_{i} - W_{i}");
        }
    }
    lp.push('\n');

    lp.push_str("Subject To\n");
    for i in 1..=n {
        let row: Vec<String> = (1..=n).map(|j| format!("x_{i}_{j}")).collect();
        let _ = writeln!(lp, " assign_{i}: {} = 1", row.join(" + "));
    }
    for j in 1..=n {
        let col: Vec<String> = (1..=n).map(|i| format!("x_{i}_{j}")).collect();
        let _ = writeln!(lp, " cap_{j}: {} <= 1", col.join(" + "));
    }
    for i in 1..=n {
        let _ = writeln!(lp, " east_{i}: E_{i}{} >= 0", position_terms(i, n));
        let _ = writeln!(lp, " west_{i}: W_{i}{} <= 0", position_terms(i, n));
    }
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        // The vertex whose span must cover the other endpoint's position.
        let (span_of, pos_of) = match axis {
            Axis::X => (v + 1, u + 1),
            Axis::Y => (u + 1, v + 1),
        };
        let terms = position_terms(pos_of, n);
        let _ = writeln!(lp, " edge_east_{}: E_{span_of}{terms} >= 0", k + 1);
        let _ = writeln!(lp, " edge_west_{}: W_{span_of}{terms} <= 0", k + 1);
    }

    lp.push_str("Bounds\n");
    for i in 1..=n {
        let _ = writeln!(lp, " 1 <= E_{i} <= {n}");
        let _ = writeln!(lp, " 1 <= W_{i} <= {n}");
    }

    lp.push_str("Binaries\n");
    for i in 1..=n {
        lp.push(' ');
        for j in 1..=n {
            if j > 1 {
                lp.push(' ');
            }
            let _ = write!(lp, "x_{i}_{j}");
        }
        lp.push('\n');
    }

    lp.push_str("Generals\n");
    for i in 1..=n {
        let _ = writeln!(lp, " E_{i} W_{i}");
    }

    lp.push_str("End\n");
    lp
}

/// The expansion `- x_i_1 - 2 x_i_2 - ... - n x_i_n` of vertex `i`'s
/// position variable, for subtracting from a span endpoint.
fn position_terms(i: usize, n: usize) -> String {
    let mut terms = String::new();
    for j in 1..=n {
        if j == 1 {
            let _ = write!(terms, " - x_{i}_{j}");
        } else {
            let _ = write!(terms, " - {j} x_{i}_{j}");
        }
    }
    terms
}
