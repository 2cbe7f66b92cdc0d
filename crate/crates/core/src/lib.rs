//! Minimum-ink L-drawings of directed graphs.
//!
//! An *L-drawing* places every vertex of a directed graph on its own row and
//! its own column of an integer grid and draws each edge `(u, v)` as a
//! one-bend elbow: a vertical segment leaving `u` on its column, then a
//! horizontal segment entering `v` on its row. Any pair of row/column
//! permutations yields a valid drawing; edges may cross and overlap, and
//! overlaps are disambiguated visually by rounded junctions at the bends.
//!
//! The quality measure is *ink*: the total length of the union of all edge
//! segments, with overlapping portions counted once. Ink splits into a
//! horizontal part that depends only on the column permutation and a vertical
//! part that depends only on the row permutation, so the two axes can be
//! optimized independently. Minimizing ink is NP-complete, which this crate
//! addresses from three sides:
//!
//! * [`incremental`]: an online heuristic that inserts one vertex at a time
//!   at the position of minimum additional ink (exact per insertion step).
//! * [`exact`]: per-axis exact solvers (branch-and-bound and a subset DP)
//!   for small graphs, plus [`lp`], an integer-programming model emitter for
//!   external solvers.
//! * [`reduction`]: the gadget construction that maps profile-minimization
//!   instances to minimum-ink instances, with cost evaluators for both sides.
//!
//! Supporting modules: [`graph`] (parsing, random generation, BFS orders),
//! [`layout`] (the drawing model and ink accounting), [`render`] (SVG), and
//! [`suite`] (benchmark harness behind the `ldraw` CLI).

pub mod exact;
pub mod graph;
pub mod incremental;
pub mod layout;
pub mod lp;
pub mod reduction;
pub mod render;
pub mod suite;

pub use graph::DirectedGraph;
pub use layout::{compute_ink, Axis, InkBreakdown, Layout};

/// Errors across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex '{0}' is not allowed")]
    SelfLoop(String),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("graph is not weakly connected")]
    Disconnected,
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("density {p}% infeasible: m = {m} edges cannot weakly connect {n} vertices")]
    DensityInfeasible { n: usize, p: u32, m: usize },
    #[error("density percent {0} out of range 0..=100")]
    DensityOutOfRange(u32),
    #[error("coordinates are not injective on axis {axis}: value {value} repeats")]
    NotInjective { axis: char, value: i64 },
    #[error("layout has {got} vertices, graph has {want}")]
    LayoutMismatch { got: usize, want: usize },
    #[error("layout is not contiguous on 1..=n as required here")]
    NotContiguous,
    #[error("{what} supports at most {limit} vertices (got {n}); pass force to override")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("insertion position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: i64, max: i64 },
    #[error("permutation is not a bijection onto 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid render style: {0}")]
    RenderStyle(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
