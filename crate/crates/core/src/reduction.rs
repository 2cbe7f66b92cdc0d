//! Linear-arrangement costs and the gadget that embeds profile
//! minimization into minimum-ink layout.
//!
//! The *profile* of a vertex order charges every vertex the distance from
//! its own position back to the leftmost position in its closed
//! neighborhood. The *sumcut* cost charges every prefix boundary one unit
//! per vertex on the left with a neighbor on the right. Minimizing either
//! over all orders is the same problem: reversing an order turns one cost
//! into the other.
//!
//! [`build_mild_instance`] turns a profile question "is there an order of
//! `G` with cost at most `k`?" into an ink question on a larger directed
//! graph: two large cliques pin down a rigid frame, one carrier vertex
//! `u_v` per original vertex sits between them, and the frame forces all
//! layout freedom into the horizontal order of the carriers, whose ink
//! reproduces the profile cost on top of a fixed overhead. Both graphs are
//! treated as undirected (symmetric relations) on the profile side.

use crate::graph::DirectedGraph;
use crate::layout::{validate_positions, Layout};
use crate::Result;

/// Profile cost of a vertex order: `positions[v]` in `1..=n`, cost
/// `sum over u of positions[u] - min over N(u) ∪ {u} of positions`,
/// with neighborhoods taken undirected.
pub fn profile_cost(g: &DirectedGraph, positions: &[usize]) -> Result<u64> {
    let n = g.vertex_count();
    validate_positions(n, positions)?;
    let mut total = 0u64;
    for u in 0..n {
        let lo = g
            .undirected_neighbors(u)
            .iter()
            .map(|&v| positions[v])
            .min()
            .unwrap_or(positions[u])
            .min(positions[u]);
        total += (positions[u] - lo) as u64;
    }
    Ok(total)
}

/// Sumcut cost of a vertex order: for each prefix boundary `i`, the number
/// of vertices at position `<= i` with an (undirected) neighbor at a
/// position `> i`, summed over all boundaries.
pub fn sumcut_cost(g: &DirectedGraph, positions: &[usize]) -> Result<u64> {
    let n = g.vertex_count();
    validate_positions(n, positions)?;
    let mut total = 0u64;
    for i in 1..=n {
        let crossing = (0..n)
            .filter(|&u| {
                positions[u] <= i
                    && g.undirected_neighbors(u)
                        .iter()
                        .any(|&v| positions[v] > i)
            })
            .count();
        total += crossing as u64;
    }
    Ok(total)
}

/// Clique size of the gadget frame for a base graph on `n` vertices:
/// `(5n^2 + 9n + 2) / 2`, always integral.
pub fn clique_size(n: usize) -> usize {
    (5 * n * n + 9 * n + 2) / 2
}

/// Fixed ink overhead of the gadget beyond the carried profile cost:
/// `4p(p-1) + (3n^2 + 9n) / 2` with `p = clique_size(n)`.
pub fn gadget_overhead(n: usize) -> u64 {
    let p = clique_size(n) as u64;
    4 * p * (p - 1) + (3 * n * n + 9 * n) as u64 / 2
}

/// A profile question recast as an ink question.
///
/// Vertex ids in `graph`: clique `K1` occupies `0..p` with its anchor
/// `anchor1 = 0`, the carriers `u_v` occupy `p..p+n` (carrier of base
/// vertex `v` is `p + v`), and clique `K2` occupies `p+n..2p+n` with
/// `anchor2 = p + n`.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    /// Number of vertices of the base graph.
    pub base_n: usize,
    /// Clique size `p`.
    pub p: usize,
    /// Profile budget `k` of the source question.
    pub budget: u64,
    /// Ink budget `k' = k + 4p(p-1) + (3/2)n^2 + (9/2)n`.
    pub ink_budget: u64,
    /// The constructed directed graph.
    pub graph: DirectedGraph,
    /// Anchor vertex of `K1` (edges from every carrier point here).
    pub anchor1: usize,
    /// Anchor vertex of `K2` (paired with every carrier in both directions).
    pub anchor2: usize,
}

impl ReductionInstance {
    /// Carrier vertex id for base vertex `v`.
    pub fn carrier(&self, v: usize) -> usize {
        self.p + v
    }

    /// Assembles the drawing that carries a profile witness: `K1` in the
    /// top-left block with `anchor1` at its bottom-right corner, `K2` in
    /// the bottom-right block with `anchor2` at its top-left corner, and
    /// the carriers between them ordered by `positions` on both axes. Its
    /// ink is exactly `gadget_overhead(n) + profile_cost(base, positions)`.
    pub fn witness_layout(&self, positions: &[usize]) -> Result<Layout> {
        let (n, p) = (self.base_n, self.p);
        validate_positions(n, positions)?;
        let total = 2 * p + n;
        let mut x = vec![0usize; total];
        let mut y = vec![0usize; total];
        // K1 on the leading diagonal, rotated so the anchor gets (p, p).
        for i in 0..p {
            let c = if i == 0 { p } else { i };
            x[i] = c;
            y[i] = c;
        }
        for v in 0..n {
            x[p + v] = p + positions[v];
            y[p + v] = p + positions[v];
        }
        // K2 likewise, anchor first at the top-left corner of its block.
        for i in 0..p {
            x[p + n + i] = p + n + 1 + i;
            y[p + n + i] = p + n + 1 + i;
        }
        Layout::new(x, y)
    }

    /// Serializes as an edge list preceded by a comment block recording
    /// the reduction parameters; [`crate::graph::parse_graph`] reads the
    /// result back (comments are skipped).
    pub fn to_text(&self) -> String {
        format!(
            "# base_n {}\n# p {}\n# k {}\n# k_prime {}\n# anchor1 {}\n# anchor2 {}\n{}",
            self.base_n,
            self.p,
            self.budget,
            self.ink_budget,
            self.graph.label(self.anchor1),
            self.graph.label(self.anchor2),
            self.graph.to_edge_list()
        )
    }
}

/// Builds the ink instance equivalent to "does `g` (read undirected) admit
/// an order of profile cost at most `k`?". The answer is yes exactly when
/// the result's `graph` has an L-drawing of ink at most `ink_budget`.
pub fn build_mild_instance(g: &DirectedGraph, k: u64) -> ReductionInstance {
    let n = g.vertex_count();
    let p = clique_size(n);
    let total = 2 * p + n;
    let (anchor1, anchor2) = (0, p + n);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for block in [0, p + n] {
        for i in 0..p {
            for j in 0..p {
                if i != j {
                    edges.push((block + i, block + j));
                }
            }
        }
    }
    for v in 0..n {
        let u_v = p + v;
        edges.push((u_v, anchor1));
        edges.push((u_v, anchor2));
        edges.push((anchor2, u_v));
    }
    for &(v, w) in g.undirected_edges().iter() {
        edges.push((p + v, p + w));
        edges.push((p + w, p + v));
    }
    let mut labels = Vec::with_capacity(total);
    labels.extend((1..=p).map(|i| format!("k1_{i}")));
    labels.extend((0..n).map(|v| format!("u_{}", g.label(v))));
    labels.extend((1..=p).map(|i| format!("k2_{i}")));
    let graph =
        DirectedGraph::with_labels(total, edges, labels).expect("gadget construction is simple");
    ReductionInstance {
        base_n: n,
        p,
        budget: k,
        ink_budget: k + gadget_overhead(n),
        graph,
        anchor1,
        anchor2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::layout::compute_ink;

    fn symmetric(text: &str) -> DirectedGraph {
        let g = parse_graph(text).unwrap();
        let edges = g
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect::<Vec<_>>();
        DirectedGraph::from_edges(g.vertex_count(), edges).unwrap()
    }

    #[test]
    fn profile_of_edgeless_graph_is_zero() {
        let g = DirectedGraph::from_edges(4, []).unwrap();
        assert_eq!(profile_cost(&g, &[3, 1, 4, 2]).unwrap(), 0);
    }

    #[test]
    fn profile_of_path_in_order() {
        let g = symmetric("a b\nb c");
        assert_eq!(profile_cost(&g, &[1, 2, 3]).unwrap(), 2);
    }

    #[test]
    fn sumcut_of_single_edge() {
        let g = symmetric("a b");
        assert_eq!(sumcut_cost(&g, &[1, 2]).unwrap(), 1);
        let edgeless = DirectedGraph::from_edges(3, []).unwrap();
        assert_eq!(sumcut_cost(&edgeless, &[2, 3, 1]).unwrap(), 0);
    }

    #[test]
    fn sumcut_equals_profile_of_reversed_order() {
        // The two costs coincide as problems, not pointwise: reversing the
        // order swaps min for max in each neighborhood. A star ordered
        // center-first shows the pointwise gap.
        let star = symmetric("c a\nc b\nc d");
        let pi = [1, 2, 3, 4];
        let rev: Vec<usize> = pi.iter().map(|&x| 4 + 1 - x).collect();
        assert_eq!(profile_cost(&star, &pi).unwrap(), 6);
        assert_eq!(sumcut_cost(&star, &pi).unwrap(), 3);
        assert_eq!(
            sumcut_cost(&star, &pi).unwrap(),
            profile_cost(&star, &rev).unwrap()
        );
    }

    #[test]
    fn permutation_validation() {
        let g = symmetric("a b");
        assert!(profile_cost(&g, &[1, 1]).is_err());
        assert!(sumcut_cost(&g, &[0, 1]).is_err());
        assert!(profile_cost(&g, &[1]).is_err());
    }

    #[test]
    fn closed_forms_at_small_sizes() {
        assert_eq!(clique_size(1), 8);
        assert_eq!(clique_size(2), 20);
        let single = DirectedGraph::from_edges(1, []).unwrap();
        let inst = build_mild_instance(&single, 0);
        assert_eq!(inst.p, 8);
        assert_eq!(inst.graph.vertex_count(), 17);
        assert_eq!(inst.ink_budget, 230);
        let pair = symmetric("a b");
        let inst2 = build_mild_instance(&pair, 3);
        assert_eq!(inst2.p, 20);
        assert_eq!(inst2.graph.vertex_count(), 42);
        assert_eq!(inst2.ink_budget, 3 + 4 * 20 * 19 + 15);
    }

    #[test]
    fn cliques_dominate_the_instance() {
        for n in 1..=20 {
            assert!(2 * clique_size(n) > n + 2, "n={n}");
        }
    }

    #[test]
    fn witness_layout_ink_is_overhead_plus_profile() {
        let pair = symmetric("a b");
        for (positions, k) in [([1, 2], 1u64), ([2, 1], 1)] {
            let inst = build_mild_instance(&pair, k);
            let layout = inst.witness_layout(&positions).unwrap();
            let ink = compute_ink(&inst.graph, &layout).unwrap().ink;
            let profile = profile_cost(&pair, &positions).unwrap();
            assert_eq!(ink, gadget_overhead(2) + profile);
            assert!(ink <= inst.ink_budget);
        }
    }

    #[test]
    fn witness_layout_single_vertex_base() {
        let single = DirectedGraph::from_edges(1, []).unwrap();
        let inst = build_mild_instance(&single, 0);
        let layout = inst.witness_layout(&[1]).unwrap();
        let ink = compute_ink(&inst.graph, &layout).unwrap().ink;
        assert_eq!(ink, 230);
    }

    #[test]
    fn serialization_round_trips_the_graph() {
        let pair = symmetric("a b");
        let inst = build_mild_instance(&pair, 1);
        let text = inst.to_text();
        assert!(text.starts_with("# base_n 2\n# p 20\n"));
        assert!(text.contains("# anchor1 k1_1\n"));
        assert!(text.contains("# anchor2 k2_1\n"));
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.vertex_count(), inst.graph.vertex_count());
        assert_eq!(back.edge_count(), inst.graph.edge_count());
    }

    #[test]
    fn carrier_edges_are_present() {
        let pair = symmetric("a b");
        let inst = build_mild_instance(&pair, 0);
        let (ua, ub) = (inst.carrier(0), inst.carrier(1));
        assert!(inst.graph.has_edge(ua, inst.anchor1));
        assert!(inst.graph.has_edge(ua, inst.anchor2));
        assert!(inst.graph.has_edge(inst.anchor2, ua));
        assert!(!inst.graph.has_edge(inst.anchor1, ua));
        assert!(inst.graph.has_edge(ua, ub));
        assert!(inst.graph.has_edge(ub, ua));
    }
}
