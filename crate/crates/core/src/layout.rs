//! The L-drawing model: vertex coordinates, row/column extents, and exact
//! ink accounting.
//!
//! A drawing assigns each vertex its own column `x_v` and row `y_v`. Edge
//! `(u, v)` is a vertical segment on column `x_u` from `y_u` to `y_v`
//! followed by a horizontal segment on row `y_v` from `x_u` to `x_v`. Ink is
//! the total length of the union of all segments, overlaps counted once.
//!
//! Because every segment on row `y_v` (the horizontal legs of edges into
//! `v`) contains the point `(x_v, y_v)`, their union is a single interval
//! per row, and likewise per column for outgoing legs. Ink therefore reduces
//! to per-vertex directional maxima: the row of `v` spans from the leftmost
//! to the rightmost of `x_v` and its in-neighbors' columns, the column of
//! `v` from the lowest to the highest of `y_v` and its out-neighbors' rows.
//! The horizontal total depends only on the column assignment and the
//! vertical total only on the row assignment, so the axes separate.

use serde::{Deserialize, Serialize};

use crate::graph::DirectedGraph;
use crate::{Error, Result};

/// Which coordinate axis a quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    X,
    Y,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

/// Vertex coordinates of an L-drawing: `x[v]` is the column, `y[v]` the row.
///
/// Coordinates are positive integers and injective per axis. A layout is
/// *contiguous* when each axis is a bijection onto `1..=n`; everything the
/// optimizers produce is contiguous, but non-contiguous (spread) layouts are
/// accepted for analysis since gaps between occupied lines cost ink.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Layout {
    /// A contiguous layout; both coordinate vectors must be bijections onto
    /// `1..=n`.
    pub fn new(x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        let layout = Self::injective(x, y)?;
        if !layout.is_contiguous() {
            return Err(Error::NotContiguous);
        }
        Ok(layout)
    }

    /// A possibly spread layout; coordinates must be positive and injective
    /// per axis but may leave gaps.
    pub fn injective(x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LayoutMismatch {
                got: x.len(),
                want: y.len(),
            });
        }
        check_injective('x', &x)?;
        check_injective('y', &y)?;
        Ok(Self { x, y })
    }

    /// Builds a contiguous layout from axis orders: the vertex at index `i`
    /// of `x_order` receives column `i + 1`, and likewise for rows. Each
    /// order must list every vertex `0..n` exactly once.
    pub fn from_orders(x_order: &[usize], y_order: &[usize]) -> Result<Self> {
        let n = x_order.len();
        if y_order.len() != n {
            return Err(Error::LayoutMismatch {
                got: x_order.len(),
                want: y_order.len(),
            });
        }
        Ok(Self {
            x: invert_order(x_order)?,
            y: invert_order(y_order)?,
        })
    }

    /// The one-vertex layout.
    pub fn single() -> Self {
        Self {
            x: vec![1],
            y: vec![1],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.x.len()
    }

    /// Column of vertex `v`.
    pub fn x(&self, v: usize) -> usize {
        self.x[v]
    }

    /// Row of vertex `v`.
    pub fn y(&self, v: usize) -> usize {
        self.y[v]
    }

    pub fn xs(&self) -> &[usize] {
        &self.x
    }

    pub fn ys(&self) -> &[usize] {
        &self.y
    }

    /// True when both axes use exactly the coordinates `1..=n`.
    pub fn is_contiguous(&self) -> bool {
        let n = self.x.len();
        let spans = |coords: &[usize]| {
            let mut seen = vec![false; n + 1];
            coords.iter().all(|&c| {
                if c >= 1 && c <= n && !seen[c] {
                    seen[c] = true;
                    true
                } else {
                    false
                }
            })
        };
        spans(&self.x) && spans(&self.y)
    }

    /// Vertices sorted by column, i.e. the column order read left to right.
    pub fn column_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.x.len()).collect();
        order.sort_by_key(|&v| self.x[v]);
        order
    }

    /// Vertices sorted by row, read from row 1 upward.
    pub fn row_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.y.len()).collect();
        order.sort_by_key(|&v| self.y[v]);
        order
    }

    /// Extends a contiguous layout by one vertex placed at column position
    /// `ix` and row position `iy` (each in `1..=n+1`); existing coordinates
    /// at or beyond an insertion position shift up by one.
    pub fn inserted(&self, ix: usize, iy: usize) -> Result<Self> {
        if !self.is_contiguous() {
            return Err(Error::NotContiguous);
        }
        let max = self.x.len() + 1;
        for pos in [ix, iy] {
            if pos < 1 || pos > max {
                return Err(Error::PositionOutOfRange {
                    pos: pos as i64,
                    max: max as i64,
                });
            }
        }
        let shift = |coords: &[usize], at: usize| -> Vec<usize> {
            let mut out: Vec<usize> = coords
                .iter()
                .map(|&c| if c >= at { c + 1 } else { c })
                .collect();
            out.push(at);
            out
        };
        Ok(Self {
            x: shift(&self.x, ix),
            y: shift(&self.y, iy),
        })
    }

    /// Serializes as one `label x y` line per vertex, in vertex order.
    pub fn to_text(&self, g: &DirectedGraph) -> String {
        let mut text = String::new();
        for v in 0..self.x.len() {
            text.push_str(&format!("{} {} {}\n", g.label(v), self.x[v], self.y[v]));
        }
        text
    }
}

fn check_injective(axis: char, coords: &[usize]) -> Result<()> {
    let mut sorted = coords.to_vec();
    sorted.sort_unstable();
    if sorted.first().is_some_and(|&c| c == 0) {
        return Err(Error::NotInjective { axis, value: 0 });
    }
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::NotInjective {
                axis,
                value: pair[0] as i64,
            });
        }
    }
    Ok(())
}

/// Checks that `positions` maps `0..n` bijectively onto `1..=n`.
pub(crate) fn validate_positions(n: usize, positions: &[usize]) -> Result<()> {
    if positions.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n + 1];
    for &p in positions {
        if p < 1 || p > n || seen[p] {
            return Err(Error::NotAPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}

fn invert_order(order: &[usize]) -> Result<Vec<usize>> {
    let n = order.len();
    let mut coord = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || coord[v] != 0 {
            return Err(Error::NotAPermutation(n));
        }
        coord[v] = i + 1;
    }
    Ok(coord)
}

/// A uniformly random contiguous layout: both axis orders drawn
/// independently by seeded shuffle. Deterministic for a fixed seed.
pub fn random_layout(n: usize, seed: u64) -> Layout {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut x_order: Vec<usize> = (0..n).collect();
    let mut y_order: Vec<usize> = (0..n).collect();
    x_order.shuffle(&mut rng);
    y_order.shuffle(&mut rng);
    Layout::from_orders(&x_order, &y_order).expect("shuffled orders are permutations")
}

/// Parses the `label x y` layout format; `#` comments and blank lines are
/// ignored. Every vertex of `g` must appear exactly once.
pub fn parse_layout(text: &str, g: &DirectedGraph) -> Result<Layout> {
    let n = g.vertex_count();
    let mut x = vec![None; n];
    let mut y = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let [label, xs, ys] = tokens.as_slice() else {
            return Err(Error::Parse {
                line,
                msg: format!("expected 'label x y', got {} tokens", tokens.len()),
            });
        };
        let v = g.label_index(label).ok_or_else(|| Error::Parse {
            line,
            msg: format!("unknown vertex '{label}'"),
        })?;
        if x[v].is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex '{label}' assigned twice"),
            });
        }
        let parse_coord = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid coordinate '{s}'"),
            })
        };
        x[v] = Some(parse_coord(xs)?);
        y[v] = Some(parse_coord(ys)?);
    }
    let assigned = x.iter().filter(|c| c.is_some()).count();
    if assigned != n {
        return Err(Error::LayoutMismatch {
            got: assigned,
            want: n,
        });
    }
    Layout::injective(
        x.into_iter().map(Option::unwrap).collect(),
        y.into_iter().map(Option::unwrap).collect(),
    )
}

/// Horizontal extent of each vertex's row: columns `w[v]..=e[v]` are covered
/// on row `y_v` by the vertex and the bends of its incoming edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowExtents {
    pub w: Vec<usize>,
    pub e: Vec<usize>,
}

/// Vertical extent of each vertex's column: rows `s[v]..=n[v]` are covered
/// on column `x_v` by the vertex and the bends of its outgoing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColExtents {
    pub s: Vec<usize>,
    pub n: Vec<usize>,
}

/// Computes both extent families. A vertex with no incoming edges has
/// `w = e = x_v`; one with no outgoing edges has `s = n = y_v`.
pub fn extents(g: &DirectedGraph, layout: &Layout) -> Result<(RowExtents, ColExtents)> {
    let n = g.vertex_count();
    if layout.vertex_count() != n {
        return Err(Error::LayoutMismatch {
            got: layout.vertex_count(),
            want: n,
        });
    }
    let mut row = RowExtents {
        w: (0..n).map(|v| layout.x(v)).collect(),
        e: (0..n).map(|v| layout.x(v)).collect(),
    };
    let mut col = ColExtents {
        s: (0..n).map(|v| layout.y(v)).collect(),
        n: (0..n).map(|v| layout.y(v)).collect(),
    };
    for &(u, v) in g.edges() {
        // Bend of (u, v) is at (x_u, y_v): on u's column and v's row.
        row.w[v] = row.w[v].min(layout.x(u));
        row.e[v] = row.e[v].max(layout.x(u));
        col.s[u] = col.s[u].min(layout.y(v));
        col.n[u] = col.n[u].max(layout.y(v));
    }
    Ok((row, col))
}

/// Exact ink of a drawing, split by axis, with the four per-vertex
/// directional leg lengths that compose it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InkBreakdown {
    /// Total horizontal ink: sum of row extent widths.
    pub ink_x: u64,
    /// Total vertical ink: sum of column extent heights.
    pub ink_y: u64,
    /// `ink_x + ink_y`.
    pub ink: u64,
    /// Per vertex, length of the row leg running left: `x_v - w_v`.
    pub west: Vec<usize>,
    /// Per vertex, length of the row leg running right: `e_v - x_v`.
    pub east: Vec<usize>,
    /// Per vertex, length of the column leg running down: `y_v - s_v`.
    pub south: Vec<usize>,
    /// Per vertex, length of the column leg running up: `n_v - y_v`.
    pub north: Vec<usize>,
}

/// Computes the ink of the drawing `(g, layout)` via row/column extents.
pub fn compute_ink(g: &DirectedGraph, layout: &Layout) -> Result<InkBreakdown> {
    let (row, col) = extents(g, layout)?;
    let n = g.vertex_count();
    let west: Vec<usize> = (0..n).map(|v| layout.x(v) - row.w[v]).collect();
    let east: Vec<usize> = (0..n).map(|v| row.e[v] - layout.x(v)).collect();
    let south: Vec<usize> = (0..n).map(|v| layout.y(v) - col.s[v]).collect();
    let north: Vec<usize> = (0..n).map(|v| col.n[v] - layout.y(v)).collect();
    let ink_x: u64 = (0..n).map(|v| (west[v] + east[v]) as u64).sum();
    let ink_y: u64 = (0..n).map(|v| (south[v] + north[v]) as u64).sum();
    Ok(InkBreakdown {
        ink_x,
        ink_y,
        ink: ink_x + ink_y,
        west,
        east,
        south,
        north,
    })
}

/// Ink of the complete graph `K_n` placed injectively on an
/// `(n + h) x (n + k)` grid with every blank line strictly between occupied
/// lines: `2n(n-1) + n(h + k)`. With `h = k = 0` this is the compact value
/// `2n(n-1)`, which every layout of `K_n` on the `n x n` grid attains.
pub fn spread_ink_formula(n: usize, h: usize, k: usize) -> u64 {
    debug_assert!(n >= 2, "formula applies to complete graphs with n >= 2");
    let n = n as u64;
    2 * n * (n - 1) + n * (h + k) as u64
}
