//! Exact per-axis ink minimization for small graphs.
//!
//! Horizontal ink depends only on the column assignment: every vertex `v`
//! costs the position span of its closed in-neighborhood `{v} ∪ in(v)`
//! (the leftmost-to-rightmost range its row must cover). Vertical ink is
//! the mirror over closed out-neighborhoods. Each axis is therefore an
//! independent permutation problem, solved here two ways:
//!
//! * **enumeration**: depth-first search over left-to-right orders with an
//!   admissible lower bound, returning the optimum whose vertex sequence is
//!   lexicographically smallest;
//! * **subset-dp**: a Held-Karp-style recurrence over vertex subsets: a
//!   neighborhood pays one unit for every prefix boundary it straddles, so
//!   `dp[Q] = min over u in Q of dp[Q \ u] + open(Q \ u)` where `open(P)`
//!   counts the neighborhoods with members on both sides of `P`.
//!
//! Both are exponential and gated by size guards; the guards can be
//! overridden when a caller accepts the runtime.

use crate::graph::DirectedGraph;
use crate::layout::{compute_ink, Axis, InkBreakdown, Layout};
use crate::{Error, Result};

/// Search strategy for [`exact_axis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactMethod {
    /// Branch-and-bound enumeration of orders; guard [`ENUMERATION_GUARD`].
    Enumeration,
    /// Subset dynamic program; guard [`SUBSET_DP_GUARD`].
    SubsetDp,
}

/// Largest `n` the enumeration accepts without `force`.
pub const ENUMERATION_GUARD: usize = 11;
/// Largest `n` the subset dp accepts without `force` (memory bound:
/// two tables of `2^n` entries).
pub const SUBSET_DP_GUARD: usize = 22;

/// One axis of the ink objective: per vertex, the set of vertices whose
/// positions its grid line must span.
#[derive(Debug, Clone)]
pub struct AxisObjective {
    axis: Axis,
    sets: Vec<Vec<usize>>,
}

impl AxisObjective {
    /// Horizontal objective: vertex `v` spans `{v}` and its in-neighbors.
    pub fn x_axis(g: &DirectedGraph) -> Self {
        Self::build(Axis::X, g.vertex_count(), |v| g.in_neighbors(v))
    }

    /// Vertical objective: vertex `v` spans `{v}` and its out-neighbors.
    pub fn y_axis(g: &DirectedGraph) -> Self {
        Self::build(Axis::Y, g.vertex_count(), |v| g.out_neighbors(v))
    }

    pub fn for_axis(g: &DirectedGraph, axis: Axis) -> Self {
        match axis {
            Axis::X => Self::x_axis(g),
            Axis::Y => Self::y_axis(g),
        }
    }

    fn build<'a>(axis: Axis, n: usize, neighbors: impl Fn(usize) -> &'a [usize]) -> Self {
        let sets = (0..n)
            .map(|v| {
                let mut set: Vec<usize> = neighbors(v).to_vec();
                set.push(v);
                set.sort_unstable();
                set.dedup();
                set
            })
            .collect();
        Self { axis, sets }
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn vertex_count(&self) -> usize {
        self.sets.len()
    }

    /// Objective value of a position assignment (`positions[v]` in `1..=n`,
    /// bijective). Equals the matching axis component of [`compute_ink`]
    /// for any layout using these positions on this axis.
    pub fn value(&self, positions: &[usize]) -> Result<u64> {
        crate::layout::validate_positions(self.sets.len(), positions)?;
        Ok(self.value_unchecked(positions))
    }

    fn value_unchecked(&self, positions: &[usize]) -> u64 {
        self.sets
            .iter()
            .map(|set| {
                let lo = set.iter().map(|&u| positions[u]).min().unwrap();
                let hi = set.iter().map(|&u| positions[u]).max().unwrap();
                (hi - lo) as u64
            })
            .sum()
    }
}

/// Minimizes one axis objective exactly. Returns the optimal position
/// assignment (`positions[v]` in `1..=n`) and its value.
///
/// Enumeration returns the optimum with the lexicographically smallest
/// left-to-right vertex sequence; the subset dp returns a deterministic
/// optimum that may be a different permutation of equal value. Guards
/// reject oversized inputs unless `force` is set.
pub fn exact_axis(
    obj: &AxisObjective,
    method: ExactMethod,
    force: bool,
) -> Result<(Vec<usize>, u64)> {
    let n = obj.vertex_count();
    let (what, limit) = match method {
        ExactMethod::Enumeration => ("exact enumeration", ENUMERATION_GUARD),
        ExactMethod::SubsetDp => ("exact subset dp", SUBSET_DP_GUARD),
    };
    if n > limit && !force {
        return Err(Error::SizeGuard { what, limit, n });
    }
    if n == 0 {
        return Ok((Vec::new(), 0));
    }
    let (order, value) = match method {
        ExactMethod::Enumeration => branch_and_bound(&obj.sets),
        ExactMethod::SubsetDp => subset_dp(&obj.sets),
    };
    let mut positions = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        positions[v] = i + 1;
    }
    debug_assert_eq!(obj.value_unchecked(&positions), value);
    Ok((positions, value))
}

/// Solves both axes independently and assembles the minimum-ink layout;
/// the returned breakdown's `ink` equals the sum of the two axis optima.
pub fn exact_layout(
    g: &DirectedGraph,
    method: ExactMethod,
    force: bool,
) -> Result<(Layout, InkBreakdown)> {
    let (px, _) = exact_axis(&AxisObjective::x_axis(g), method, force)?;
    let (py, _) = exact_axis(&AxisObjective::y_axis(g), method, force)?;
    let layout = Layout::new(px, py)?;
    let ink = compute_ink(g, &layout)?;
    Ok((layout, ink))
}

struct Search<'a> {
    sets: &'a [Vec<usize>],
    /// For each vertex, the indices of the sets containing it.
    member_of: Vec<Vec<usize>>,
    placed: Vec<usize>,
    min_pos: Vec<usize>,
    max_pos: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
    best_order: Vec<usize>,
    best_value: u64,
}

fn branch_and_bound(sets: &[Vec<usize>]) -> (Vec<usize>, u64) {
    let n = sets.len();
    let mut member_of = vec![Vec::new(); n];
    for (v, set) in sets.iter().enumerate() {
        for &u in set {
            member_of[u].push(v);
        }
    }
    // Seed with the identity order, which is also the lexicographically
    // smallest; only strict improvements are accepted afterwards.
    let identity: Vec<usize> = (0..n).collect();
    let identity_positions: Vec<usize> = (1..=n).collect();
    let identity_value: u64 = sets
        .iter()
        .map(|set| {
            let lo = set.iter().map(|&u| identity_positions[u]).min().unwrap();
            let hi = set.iter().map(|&u| identity_positions[u]).max().unwrap();
            (hi - lo) as u64
        })
        .sum();
    let mut search = Search {
        sets,
        member_of,
        placed: vec![0; n],
        min_pos: vec![0; n],
        max_pos: vec![0; n],
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best_order: identity,
        best_value: identity_value,
    };
    search.dfs();
    (search.best_order, search.best_value)
}

impl Search<'_> {
    /// Admissible lower bound at the current prefix: closed neighborhoods
    /// contribute their final span; an open one must still reach a
    /// position beyond `t + remaining - 1`; an untouched one of size `d`
    /// will span at least `d - 1`.
    fn bound(&self) -> u64 {
        let t = self.order.len();
        let mut total = 0u64;
        for (v, set) in self.sets.iter().enumerate() {
            let c = self.placed[v];
            total += if c == 0 {
                (set.len() - 1) as u64
            } else if c == set.len() {
                (self.max_pos[v] - self.min_pos[v]) as u64
            } else {
                (t + (set.len() - c) - self.min_pos[v]) as u64
            };
        }
        total
    }

    fn dfs(&mut self) {
        let n = self.sets.len();
        let t = self.order.len();
        let bound = self.bound();
        if bound >= self.best_value {
            return;
        }
        if t == n {
            // All neighborhoods closed, so the bound is the exact value.
            self.best_value = bound;
            self.best_order = self.order.clone();
            return;
        }
        for u in 0..n {
            if self.used[u] {
                continue;
            }
            self.used[u] = true;
            self.order.push(u);
            let pos = t + 1;
            let mut undo: Vec<(usize, usize, usize, usize)> = Vec::new();
            for i in 0..self.member_of[u].len() {
                let v = self.member_of[u][i];
                undo.push((v, self.placed[v], self.min_pos[v], self.max_pos[v]));
                if self.placed[v] == 0 {
                    self.min_pos[v] = pos;
                }
                self.max_pos[v] = pos;
                self.placed[v] += 1;
            }
            self.dfs();
            for &(v, placed, lo, hi) in undo.iter().rev() {
                self.placed[v] = placed;
                self.min_pos[v] = lo;
                self.max_pos[v] = hi;
            }
            self.order.pop();
            self.used[u] = false;
        }
    }
}

fn subset_dp(sets: &[Vec<usize>]) -> (Vec<usize>, u64) {
    let n = sets.len();
    assert!(n <= usize::BITS as usize - 2, "subset dp mask overflow");
    let full: usize = (1 << n) - 1;
    let masks: Vec<usize> = sets
        .iter()
        .map(|set| set.iter().fold(0usize, |m, &u| m | (1 << u)))
        .collect();
    // open[q] = how many neighborhoods straddle the prefix/suffix boundary
    // of subset q.
    let mut open = vec![0u8; full + 1];
    for (q, slot) in open.iter_mut().enumerate() {
        let complement = full ^ q;
        *slot = masks
            .iter()
            .filter(|&&m| m & q != 0 && m & complement != 0)
            .count() as u8;
    }
    let mut dp = vec![u32::MAX; full + 1];
    dp[0] = 0;
    for q in 1..=full {
        let mut best = u32::MAX;
        let mut bits = q;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = q & !(1 << u);
            let cand = dp[prev] + open[prev] as u32;
            if cand < best {
                best = cand;
            }
        }
        dp[q] = best;
    }
    // Walk backward, peeling the smallest vertex that achieves each state.
    let mut order = vec![0usize; n];
    let mut q = full;
    for slot in (0..n).rev() {
        let mut bits = q;
        let mut chosen = None;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = q & !(1 << u);
            if dp[prev] != u32::MAX && dp[prev] + open[prev] as u32 == dp[q] {
                chosen = Some(u);
                break;
            }
        }
        let u = chosen.expect("dp table is consistent");
        order[slot] = u;
        q &= !(1 << u);
    }
    (order, dp[full] as u64)
}
