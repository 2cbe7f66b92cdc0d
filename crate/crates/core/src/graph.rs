//! Directed graphs: construction, text formats, random generation, BFS orders.
//!
//! Vertices are dense indices `0..n`. Antiparallel edge pairs `(u, v)` and
//! `(v, u)` may coexist; self-loops and duplicate edges are rejected or
//! collapsed at construction. Every graph keeps the original vertex labels
//! from its source text (or decimal indices when generated) for output.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};

use crate::{Error, Result};

/// An immutable simple directed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl DirectedGraph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops are an error. Vertices must lie in `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::with_labels(n, edges, labels)
    }

    /// As [`from_edges`](Self::from_edges) with explicit vertex labels.
    pub fn with_labels(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Vec<String>,
    ) -> Result<Self> {
        assert_eq!(labels.len(), n, "one label per vertex");
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            out,
            inn,
            labels,
        })
    }

    /// The complete directed graph: every ordered pair `(u, v)`, `u != v`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, sorted by `(source, target)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Neighbors in the underlying undirected graph, sorted and deduplicated.
    pub fn undirected_neighbors(&self, v: usize) -> Vec<usize> {
        let mut nb: Vec<usize> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    /// Undirected edge set as `(min, max)` pairs, deduplicated.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut und: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        und.sort_unstable();
        und.dedup();
        und
    }

    /// The graph with every edge direction flipped. Labels are preserved.
    pub fn reversed(&self) -> Self {
        Self::with_labels(
            self.n,
            self.edges.iter().map(|&(u, v)| (v, u)),
            self.labels.clone(),
        )
        .expect("reversal preserves simplicity")
    }

    /// A copy with one extra vertex `n`, with edges `n -> u` for `u` in
    /// `out_nb` and `w -> n` for `w` in `in_nb`.
    pub fn add_vertex(&self, out_nb: &[usize], in_nb: &[usize]) -> Result<Self> {
        for &u in out_nb.iter().chain(in_nb) {
            if u >= self.n {
                return Err(Error::VertexOutOfRange(u, self.n));
            }
        }
        let v = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(out_nb.iter().map(|&u| (v, u)))
            .chain(in_nb.iter().map(|&w| (w, v)));
        let mut labels = self.labels.clone();
        labels.push(v.to_string());
        Self::with_labels(self.n + 1, edges, labels)
    }

    /// Serializes to the edge-list format; isolated vertices appear as bare
    /// single-label lines so that parsing is the inverse on edge sets.
    pub fn to_edge_list(&self) -> String {
        let mut text = String::new();
        let mut mentioned = vec![false; self.n];
        for &(u, v) in &self.edges {
            mentioned[u] = true;
            mentioned[v] = true;
            text.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        for (v, seen) in mentioned.iter().enumerate() {
            if !seen {
                text.push_str(&format!("{}\n", self.labels[v]));
            }
        }
        text
    }
}

/// True when the underlying undirected graph is connected (vacuously for
/// `n <= 1`).
pub fn weakly_connected(g: &DirectedGraph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for w in g.undirected_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// Parses either the plain edge-list format or the `digraph { .. }` subset.
///
/// Edge-list grammar: one `src dst` pair per line, a single bare label
/// declares an isolated vertex, `#` starts a comment, blank lines are
/// ignored. Vertices are numbered densely in order of first appearance.
pub fn parse_graph(text: &str) -> Result<DirectedGraph> {
    let is_dot = text
        .lines()
        .map(|l| strip_comment(l).trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("digraph"));
    if is_dot {
        parse_dot(text)
    } else {
        parse_edge_list(text)
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find(['#']) {
        Some(pos) => &line[..pos],
        None => line,
    }
}

struct Interner {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn new() -> Self {
        Self {
            ids: HashMap::new(),
            labels: Vec::new(),
        }
    }

    fn intern(&mut self, token: &str) -> usize {
        match self.ids.get(token) {
            Some(&id) => id,
            None => {
                let id = self.labels.len();
                self.ids.insert(token.to_string(), id);
                self.labels.push(token.to_string());
                id
            }
        }
    }
}

fn parse_edge_list(text: &str) -> Result<DirectedGraph> {
    let mut interner = Interner::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [single] => {
                interner.intern(single);
            }
            [src, dst] => {
                if src == dst {
                    return Err(Error::SelfLoop((*src).to_string()));
                }
                let u = interner.intern(src);
                let v = interner.intern(dst);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected 'src dst', got {} tokens", tokens.len()),
                })
            }
        }
    }
    let n = interner.labels.len();
    DirectedGraph::with_labels(n, edges, interner.labels)
}

#[derive(Debug, PartialEq)]
enum DotToken {
    Ident(String),
    Arrow,
    LBrace,
    RBrace,
    Semi,
}

fn dot_tokens(text: &str) -> Result<Vec<(usize, DotToken)>> {
    let mut tokens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stripped = strip_comment(raw);
        let stripped = match stripped.find("//") {
            Some(pos) => &stripped[..pos],
            None => stripped,
        };
        let mut chars = stripped.char_indices().peekable();
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c == '{' {
                chars.next();
                tokens.push((line, DotToken::LBrace));
            } else if c == '}' {
                chars.next();
                tokens.push((line, DotToken::RBrace));
            } else if c == ';' {
                chars.next();
                tokens.push((line, DotToken::Semi));
            } else if c == '-' {
                chars.next();
                if chars.peek().map(|&(_, c2)| c2) == Some('>') {
                    chars.next();
                    tokens.push((line, DotToken::Arrow));
                } else {
                    return Err(Error::Parse {
                        line,
                        msg: "expected '->'".into(),
                    });
                }
            } else if c.is_alphanumeric() || c == '_' || c == '.' {
                let start = pos;
                let mut end = pos + c.len_utf8();
                chars.next();
                while let Some(&(p, c2)) = chars.peek() {
                    if c2.is_alphanumeric() || c2 == '_' || c2 == '.' {
                        end = p + c2.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push((line, DotToken::Ident(stripped[start..end].to_string())));
            } else {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected character '{c}'"),
                });
            }
        }
    }
    Ok(tokens)
}

fn parse_dot(text: &str) -> Result<DirectedGraph> {
    let tokens = dot_tokens(text)?;
    let mut iter = tokens.into_iter().peekable();
    match iter.next() {
        Some((_, DotToken::Ident(kw))) if kw == "digraph" => {}
        other => {
            let line = other.map_or(1, |(l, _)| l);
            return Err(Error::Parse {
                line,
                msg: "expected 'digraph'".into(),
            });
        }
    }
    // optional graph name
    if matches!(iter.peek(), Some((_, DotToken::Ident(_)))) {
        iter.next();
    }
    match iter.next() {
        Some((_, DotToken::LBrace)) => {}
        other => {
            let line = other.map_or(1, |(l, _)| l);
            return Err(Error::Parse {
                line,
                msg: "expected '{'".into(),
            });
        }
    }

    let mut interner = Interner::new();
    let mut edges = Vec::new();
    let mut closed = false;
    while let Some((line, token)) = iter.next() {
        match token {
            DotToken::RBrace => {
                closed = true;
                break;
            }
            DotToken::Semi => {}
            DotToken::Ident(first) => {
                // statement: ident (-> ident)*
                let mut prev = first;
                while matches!(iter.peek(), Some((_, DotToken::Arrow))) {
                    iter.next();
                    match iter.next() {
                        Some((line2, DotToken::Ident(next))) => {
                            if prev == next {
                                return Err(Error::SelfLoop(next));
                            }
                            let u = interner.intern(&prev);
                            let v = interner.intern(&next);
                            edges.push((u, v));
                            prev = next;
                            let _ = line2;
                        }
                        other => {
                            let line2 = other.map_or(line, |(l, _)| l);
                            return Err(Error::Parse {
                                line: line2,
                                msg: "expected identifier after '->'".into(),
                            });
                        }
                    }
                }
                interner.intern(&prev);
            }
            DotToken::Arrow | DotToken::LBrace => {
                return Err(Error::Parse {
                    line,
                    msg: "unexpected token".into(),
                })
            }
        }
    }
    if !closed {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing closing '}'".into(),
        });
    }
    if let Some((line, _)) = iter.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing input after '}'".into(),
        });
    }
    let n = interner.labels.len();
    DirectedGraph::with_labels(n, edges, interner.labels)
}

/// Number of edges for `n` vertices at density percent `p`:
/// `floor(n * (n - 1) * p / 100)`.
pub fn gnm_edge_count(n: usize, p: u32) -> usize {
    n * n.saturating_sub(1) * p as usize / 100
}

/// Draws a graph uniformly among simple directed graphs with exactly
/// `floor(n(n-1)p/100)` edges, resampling until it is weakly connected.
/// Deterministic for a fixed seed.
pub fn random_connected_gnm(n: usize, p: u32, seed: u64) -> Result<DirectedGraph> {
    if p > 100 {
        return Err(Error::DensityOutOfRange(p));
    }
    let m = gnm_edge_count(n, p);
    if m + 1 < n {
        return Err(Error::DensityInfeasible { n, p, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let picks = rand::seq::index::sample(&mut rng, n * (n - 1), m);
        let edges = picks.iter().map(|k| {
            let u = k / (n - 1);
            let r = k % (n - 1);
            let v = if r < u { r } else { r + 1 };
            (u, v)
        });
        let g = DirectedGraph::from_edges(n, edges)?;
        if weakly_connected(&g) {
            return Ok(g);
        }
    }
}

/// A BFS order of the underlying undirected graph starting at `start`, with
/// every adjacency list shuffled by `shuffle_seed` before traversal. Every
/// prefix of the returned order induces a weakly connected subgraph.
pub fn bfs_order(g: &DirectedGraph, start: usize, shuffle_seed: u64) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if start >= n {
        return Err(Error::VertexOutOfRange(start, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.undirected_neighbors(v)).collect();
    for list in adj.iter_mut() {
        list.shuffle(&mut rng);
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Disconnected);
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_antiparallel_pair() {
        let g = parse_graph("a b\nb a").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 0)]);
        assert_eq!(g.label(0), "a");
    }

    #[test]
    fn parse_rejects_self_loop() {
        match parse_graph("a a") {
            Err(Error::SelfLoop(v)) => assert_eq!(v, "a"),
            other => panic!("expected self-loop error, got {other:?}"),
        }
    }

    #[test]
    fn parse_reports_line_numbers() {
        match parse_graph("a b\n\nc d e") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_collapses_duplicates_and_skips_comments() {
        let g = parse_graph("# header\na b\na b # again\n\nb c\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_dot_subset() {
        let g = parse_graph("digraph g {\n  a -> b;\n  b -> c -> a\n  d;\n}\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.label(3), "d");
        assert!(g.undirected_neighbors(3).is_empty());
    }

    #[test]
    fn parse_dot_self_loop() {
        assert!(matches!(
            parse_graph("digraph { a -> a; }"),
            Err(Error::SelfLoop(v)) if v == "a"
        ));
    }

    #[test]
    fn fifteen_vertex_edge_list() {
        // 21 directed edges over 15 vertices, the first-suite sparse shape.
        let g = random_connected_gnm(15, 10, 99).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text.lines().count(), 21);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.vertex_count(), 15);
        assert_eq!(back.edge_count(), 21);
    }

    #[test]
    fn gnm_edge_counts_match_formula() {
        assert_eq!(gnm_edge_count(15, 10), 21);
        assert_eq!(gnm_edge_count(15, 30), 63);
        assert_eq!(gnm_edge_count(5, 10), 2);
    }

    #[test]
    fn gnm_density_infeasible() {
        assert!(matches!(
            random_connected_gnm(5, 10, 1),
            Err(Error::DensityInfeasible { m: 2, .. })
        ));
    }

    #[test]
    fn gnm_deterministic_and_connected() {
        let a = random_connected_gnm(12, 20, 7).unwrap();
        let b = random_connected_gnm(12, 20, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), gnm_edge_count(12, 20));
        assert!(weakly_connected(&a));
        let c = random_connected_gnm(12, 20, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bfs_path_is_forced() {
        let g = parse_graph("a b\nb c").unwrap();
        assert_eq!(bfs_order(&g, 0, 5).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn bfs_on_k4_starts_at_start() {
        let g = DirectedGraph::complete(4);
        for seed in 0..5 {
            let order = bfs_order(&g, 2, seed).unwrap();
            assert_eq!(order[0], 2);
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn bfs_rejects_disconnected() {
        let g = DirectedGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(bfs_order(&g, 0, 0), Err(Error::Disconnected)));
    }

    #[test]
    fn reversal_flips_neighborhoods() {
        let g = parse_graph("a b\na c\nb c").unwrap();
        let r = g.reversed();
        assert_eq!(r.out_neighbors(2), &[0, 1][..]);
        assert_eq!(r.in_neighbors(0), &[1, 2][..]);
    }
}
