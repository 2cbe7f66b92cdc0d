//! Shared test oracles. Each one recounts geometry, enumerates
//! exhaustively, or reparses emitted text instead of reusing the
//! library arithmetic it checks.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use rand::Rng;

use ldrawing::exact::AxisObjective;
use ldrawing::graph::DirectedGraph;
use ldrawing::layout::Layout;
use ldrawing::render::RenderStyle;

/// Ink by rasterization: paint every unit-length piece of every edge
/// segment onto the grid and count distinct pieces. Returns
/// (horizontal, vertical) totals.
pub fn raster_ink_split(g: &DirectedGraph, layout: &Layout) -> (u64, u64) {
    let mut horizontal: HashSet<(usize, usize)> = HashSet::new();
    let mut vertical: HashSet<(usize, usize)> = HashSet::new();
    for &(u, v) in g.edges() {
        let (ux, uy) = (layout.x(u), layout.y(u));
        let (vx, vy) = (layout.x(v), layout.y(v));
        for t in uy.min(vy)..uy.max(vy) {
            vertical.insert((ux, t));
        }
        for t in ux.min(vx)..ux.max(vx) {
            horizontal.insert((t, vy));
        }
    }
    (horizontal.len() as u64, vertical.len() as u64)
}

pub fn raster_ink(g: &DirectedGraph, layout: &Layout) -> u64 {
    let (h, v) = raster_ink_split(g, layout);
    h + v
}

/// Inserts a vertex at `(ix, iy)` by shifting occupied coordinates out
/// of the way, without going through the library's insertion code.
pub fn shifted_insert(layout: &Layout, ix: usize, iy: usize) -> Layout {
    let mut xs: Vec<usize> = layout
        .xs()
        .iter()
        .map(|&x| if x >= ix { x + 1 } else { x })
        .collect();
    let mut ys: Vec<usize> = layout
        .ys()
        .iter()
        .map(|&y| if y >= iy { y + 1 } else { y })
        .collect();
    xs.push(ix);
    ys.push(iy);
    Layout::new(xs, ys).expect("shifting keeps the layout contiguous")
}

/// Added ink per insertion position on each axis, by rebuilding the
/// grown graph and recounting from scratch at all n+1 positions.
/// Returns (per-column costs, per-row costs), each indexed by
/// position - 1.
pub fn added_ink_oracle(
    g: &DirectedGraph,
    layout: &Layout,
    out_nb: &[usize],
    in_nb: &[usize],
) -> (Vec<u64>, Vec<u64>) {
    let n = g.vertex_count();
    let grown = g.add_vertex(out_nb, in_nb).expect("oracle neighbors are valid");
    let (base_h, base_v) = raster_ink_split(g, layout);
    let mut by_column = Vec::with_capacity(n + 1);
    let mut by_row = Vec::with_capacity(n + 1);
    for pos in 1..=n + 1 {
        let (h, _) = raster_ink_split(&grown, &shifted_insert(layout, pos, 1));
        by_column.push(h - base_h);
        let (_, v) = raster_ink_split(&grown, &shifted_insert(layout, 1, pos));
        by_row.push(v - base_v);
    }
    (by_column, by_row)
}

/// Optimal axis value over all n! orders, with the lexicographically
/// smallest optimal vertex sequence. Returns (positions, value).
pub fn brute_force_axis(obj: &AxisObjective) -> (Vec<usize>, u64) {
    let n = obj.vertex_count();
    let mut best: Option<(Vec<usize>, u64)> = None;
    for order in (0..n).permutations(n) {
        let mut positions = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            positions[v] = p + 1;
        }
        let value = obj.value(&positions).expect("order is a permutation");
        let better = match &best {
            None => true,
            Some((_, best_value)) => value < *best_value,
        };
        if better {
            best = Some((positions, value));
        }
    }
    best.unwrap_or((Vec::new(), 0))
}

/// Every undirected graph on n labeled vertices, one arc per edge.
pub fn all_undirected_graphs(n: usize) -> Vec<DirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            DirectedGraph::from_edges(n, edges).expect("pairs exclude loops")
        })
        .collect()
}

/// Every bijection of n vertices onto positions 1..=n.
pub fn all_positions(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Random injective placement of n >= 2 vertices whose occupied columns
/// span exactly n + h cells and rows exactly n + k.
pub fn spread_layout(rng: &mut impl Rng, n: usize, h: usize, k: usize) -> Layout {
    let xs = spread_coords(rng, n, h);
    let ys = spread_coords(rng, n, k);
    Layout::injective(xs, ys).expect("coordinates are injective")
}

fn spread_coords(rng: &mut impl Rng, n: usize, extra: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    assert!(n >= 2, "a single coordinate cannot span extra cells");
    let mut values: Vec<usize> = if extra == 0 {
        (1..=n).collect()
    } else {
        let mut middle: Vec<usize> = (2..n + extra).collect();
        middle.shuffle(rng);
        let mut chosen: Vec<usize> = middle.into_iter().take(n - 2).collect();
        chosen.push(1);
        chosen.push(n + extra);
        chosen
    };
    values.shuffle(rng);
    values
}

/// Seeded digraph with each ordered pair included independently.
pub fn random_digraph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> DirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edges(n, edges).expect("pairs exclude loops")
}

/// Disjoint-set forest for independent connectivity checks.
pub struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn components(&mut self) -> usize {
        (0..self.parent.len()).map(|v| self.find(v)).unique().count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpCmp {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct LpConstraint {
    pub name: String,
    pub terms: Vec<(f64, String)>,
    pub cmp: LpCmp,
    pub rhs: f64,
}

/// A CPLEX LP file reduced to the subset the emitter produces.
#[derive(Debug, Clone, Default)]
pub struct LpModel {
    pub objective: Vec<(f64, String)>,
    pub constraints: Vec<LpConstraint>,
    pub bounds: HashMap<String, (f64, f64)>,
    pub binaries: HashSet<String>,
    pub generals: HashSet<String>,
}

fn parse_terms(text: &str) -> Vec<(f64, String)> {
    let mut terms = Vec::new();
    let mut sign = 1.0;
    let mut coef: Option<f64> = None;
    for token in text.split_whitespace() {
        match token {
            "+" => sign = 1.0,
            "-" => sign = -1.0,
            _ => {
                if let Ok(value) = token.parse::<f64>() {
                    assert!(coef.is_none(), "two coefficients in a row: {text}");
                    coef = Some(value);
                } else {
                    terms.push((sign * coef.take().unwrap_or(1.0), token.to_string()));
                    sign = 1.0;
                }
            }
        }
    }
    assert!(coef.is_none(), "dangling coefficient in: {text}");
    terms
}

/// Parses the emitted LP text. Panics on anything outside the emitted
/// grammar; the point is to read the artifact back, not to be lenient.
pub fn parse_lp(text: &str) -> LpModel {
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Objective,
        Constraints,
        Bounds,
        Binaries,
        Generals,
        Done,
    }
    let mut section = Section::Preamble;
    let mut model = LpModel::default();
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('\\') {
            continue;
        }
        match trimmed {
            "Minimize" => {
                section = Section::Objective;
                continue;
            }
            "Subject To" => {
                section = Section::Constraints;
                continue;
            }
            "Bounds" => {
                section = Section::Bounds;
                continue;
            }
            "Binaries" => {
                section = Section::Binaries;
                continue;
            }
            "Generals" => {
                section = Section::Generals;
                continue;
            }
            "End" => {
                section = Section::Done;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Preamble | Section::Done => panic!("unexpected line: {line}"),
            Section::Objective => {
                let (_, expr) = trimmed.split_once(':').expect("objective has a name");
                model.objective.extend(parse_terms(expr));
            }
            Section::Constraints => {
                let (name, rest) = trimmed.split_once(':').expect("constraint has a name");
                let (cmp, op) = if rest.contains("<=") {
                    (LpCmp::Le, "<=")
                } else if rest.contains(">=") {
                    (LpCmp::Ge, ">=")
                } else {
                    (LpCmp::Eq, "=")
                };
                let (lhs, rhs) = rest.split_once(op).expect("constraint has an operator");
                model.constraints.push(LpConstraint {
                    name: name.trim().to_string(),
                    terms: parse_terms(lhs),
                    cmp,
                    rhs: rhs.trim().parse().expect("numeric right-hand side"),
                });
            }
            Section::Bounds => {
                let parts: Vec<&str> = trimmed.split_whitespace().collect();
                let [lo, "<=", var, "<=", hi] = parts.as_slice() else {
                    panic!("unexpected bounds line: {line}");
                };
                model.bounds.insert(
                    var.to_string(),
                    (lo.parse().expect("numeric"), hi.parse().expect("numeric")),
                );
            }
            Section::Binaries => {
                for var in trimmed.split_whitespace() {
                    model.binaries.insert(var.to_string());
                }
            }
            Section::Generals => {
                for var in trimmed.split_whitespace() {
                    model.generals.insert(var.to_string());
                }
            }
        }
    }
    assert!(section == Section::Done, "missing End line");
    model
}

fn binary_grid_size(model: &LpModel) -> usize {
    let mut n = 0;
    for var in &model.binaries {
        let parts: Vec<&str> = var.split('_').collect();
        let ["x", i, j] = parts.as_slice() else {
            panic!("unexpected binary name {var}");
        };
        let (i, j): (usize, usize) = (i.parse().unwrap(), j.parse().unwrap());
        n = n.max(i).max(j);
    }
    assert_eq!(model.binaries.len(), n * n, "binaries do not form a grid");
    n
}

/// Minimizes the parsed model by exhausting the binary assignment grid.
///
/// Feasible binary assignments are restricted to permutation matrices,
/// which is exactly what the assignment and capacity rows admit; those
/// rows are still checked explicitly for every candidate. Each remaining
/// constraint must bound a single non-binary variable with a unit
/// coefficient; the variable then sits at whichever bound its objective
/// sign prefers. Returns the optimum, or None if nothing is feasible.
pub fn solve_lp(model: &LpModel) -> Option<f64> {
    let n = binary_grid_size(model);
    let mut best: Option<f64> = None;
    for perm in (1..=n).permutations(n) {
        let assignment: HashMap<String, f64> = (1..=n)
            .flat_map(|i| {
                let pos = perm[i - 1];
                (1..=n).map(move |j| (format!("x_{i}_{j}"), if j == pos { 1.0 } else { 0.0 }))
            })
            .collect();
        // lower/upper bound accumulated per free variable.
        let mut lower: HashMap<String, f64> = HashMap::new();
        let mut upper: HashMap<String, f64> = HashMap::new();
        for (var, &(lo, hi)) in &model.bounds {
            lower.insert(var.clone(), lo);
            upper.insert(var.clone(), hi);
        }
        let mut feasible = true;
        for constraint in &model.constraints {
            let mut fixed = 0.0;
            let mut free: Option<(f64, &str)> = None;
            for (coef, var) in &constraint.terms {
                match assignment.get(var) {
                    Some(value) => fixed += coef * value,
                    None => {
                        assert!(free.is_none(), "{}: two free variables", constraint.name);
                        assert!(coef.abs() == 1.0, "{}: non-unit free variable", constraint.name);
                        free = Some((*coef, var.as_str()));
                    }
                }
            }
            match free {
                None => {
                    let ok = match constraint.cmp {
                        LpCmp::Le => fixed <= constraint.rhs + 1e-9,
                        LpCmp::Ge => fixed >= constraint.rhs - 1e-9,
                        LpCmp::Eq => (fixed - constraint.rhs).abs() < 1e-9,
                    };
                    if !ok {
                        feasible = false;
                        break;
                    }
                }
                Some((coef, var)) => {
                    // coef * v + fixed (cmp) rhs, coef in {1, -1}.
                    let bound = (constraint.rhs - fixed) / coef;
                    let effective = if coef > 0.0 {
                        constraint.cmp
                    } else {
                        match constraint.cmp {
                            LpCmp::Le => LpCmp::Ge,
                            LpCmp::Ge => LpCmp::Le,
                            LpCmp::Eq => LpCmp::Eq,
                        }
                    };
                    let (lo, hi) = (lower.get_mut(var).unwrap(), upper.get_mut(var).unwrap());
                    match effective {
                        LpCmp::Ge => *lo = lo.max(bound),
                        LpCmp::Le => *hi = hi.min(bound),
                        LpCmp::Eq => {
                            *lo = lo.max(bound);
                            *hi = hi.min(bound);
                        }
                    }
                }
            }
        }
        if !feasible {
            continue;
        }
        let mut objective = 0.0;
        for (coef, var) in &model.objective {
            let value = match assignment.get(var) {
                Some(v) => *v,
                None => {
                    let (lo, hi) = (lower[var], upper[var]);
                    if lo > hi + 1e-9 {
                        feasible = false;
                        break;
                    }
                    if *coef >= 0.0 {
                        lo
                    } else {
                        hi
                    }
                }
            };
            objective += coef * value;
        }
        if !feasible {
            continue;
        }
        if best.is_none_or(|b| objective < b) {
            best = Some(objective);
        }
    }
    best
}

/// Minimal well-formedness check: balanced tags, quoted attributes,
/// escaped text. Panics with a location on the first violation.
pub fn check_xml(text: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        if c != '<' {
            assert!(c != '>', "stray '>' at byte {at}");
            if c == '&' {
                let rest = &text[at..];
                assert!(
                    rest.starts_with("&amp;") || rest.starts_with("&lt;") || rest.starts_with("&gt;"),
                    "unescaped '&' at byte {at}"
                );
            }
            continue;
        }
        let mut tag = String::new();
        let mut in_quote = false;
        loop {
            let (_, c) = chars.next().unwrap_or_else(|| panic!("unclosed tag at byte {at}"));
            if c == '"' {
                in_quote = !in_quote;
            }
            if c == '>' && !in_quote {
                break;
            }
            tag.push(c);
        }
        assert!(!in_quote, "unbalanced quote in tag at byte {at}");
        if tag.starts_with('?') {
            assert!(tag.ends_with('?'), "malformed declaration at byte {at}");
        } else if let Some(name) = tag.strip_prefix('/') {
            let open = stack.pop().unwrap_or_else(|| panic!("orphan </{name}>"));
            assert_eq!(open, name, "mismatched </{name}>");
        } else {
            let self_closing = tag.ends_with('/');
            let body = tag.trim_end_matches('/');
            let name = body.split_whitespace().next().expect("tag has a name");
            if !self_closing {
                stack.push(name.to_string());
            }
        }
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}

/// All `d` attribute values in document order.
pub fn path_data(svg: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = svg;
    while let Some(at) = rest.find("d=\"") {
        let tail = &rest[at + 3..];
        let end = tail.find('"').expect("closing quote");
        out.push(tail[..end].to_string());
        rest = &tail[end..];
    }
    out
}

/// An elbow reconstructed from its path data, in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Elbow {
    pub start: (f64, f64),
    pub leg_end_y: f64,
    pub radius: f64,
    pub sweep: u8,
    pub arc_end: (f64, f64),
    pub line_end_x: f64,
}

/// Recovers the drawn grid segments from an SVG: parses every elbow,
/// undoes the junction and arrowhead cutbacks analytically, and returns
/// the union lengths in grid units as (horizontal, vertical, elbows).
/// Panics if any recovered endpoint is off the grid or a cutback is
/// inconsistent with the style.
pub fn svg_segment_union(svg: &str, style: &RenderStyle) -> (u64, u64, usize) {
    let cell = style.cell;
    let as_grid = |value: f64| -> usize {
        let scaled = value / cell;
        let rounded = scaled.round();
        assert!((scaled - rounded).abs() < 1e-9, "{value} is off the grid");
        rounded as usize
    };
    let mut horizontal: HashSet<(usize, usize)> = HashSet::new();
    let mut vertical: HashSet<(usize, usize)> = HashSet::new();
    let mut elbows = 0;
    for d in path_data(svg) {
        let Some(elbow) = parse_elbow(&d) else {
            continue;
        };
        elbows += 1;
        let (ux, uy) = (as_grid(elbow.start.0), as_grid(elbow.start.1));
        let vy = as_grid(elbow.arc_end.1);
        let dy = if vy > uy { 1.0 } else { -1.0 };
        assert!(
            (elbow.leg_end_y - (vy as f64 * cell - dy * elbow.radius)).abs() < 1e-9,
            "leg cutback is off in {d}"
        );
        let dx = if elbow.arc_end.0 > elbow.start.0 { 1.0 } else { -1.0 };
        assert!(
            (elbow.arc_end.0 - (ux as f64 * cell + dx * elbow.radius)).abs() < 1e-9,
            "arc start is off in {d}"
        );
        let vx = as_grid(elbow.line_end_x + dx * (style.vertex_radius + style.arrow));
        assert_ne!((ux, uy), (vx, vy), "degenerate elbow in {d}");
        for t in uy.min(vy)..uy.max(vy) {
            vertical.insert((ux, t));
        }
        for t in ux.min(vx)..ux.max(vx) {
            horizontal.insert((t, vy));
        }
    }
    (horizontal.len() as u64, vertical.len() as u64, elbows)
}

/// Parses `M x y V y A r r 0 0 s x y H x`; returns None for the
/// arrowhead triangles, which use line segments instead.
pub fn parse_elbow(d: &str) -> Option<Elbow> {
    let tokens: Vec<&str> = d.split_whitespace().collect();
    if tokens.get(3) != Some(&"V") {
        return None;
    }
    let num = |i: usize| -> f64 { tokens[i].parse().expect("numeric path token") };
    assert_eq!(tokens.len(), 15, "unexpected elbow shape: {d}");
    assert_eq!(tokens[0], "M");
    assert_eq!(tokens[5], "A");
    assert_eq!(tokens[13], "H");
    assert_eq!(num(6), num(7), "elliptic junction: {d}");
    Some(Elbow {
        start: (num(1), num(2)),
        leg_end_y: num(4),
        radius: num(6),
        sweep: tokens[10].parse().expect("sweep flag"),
        arc_end: (num(11), num(12)),
        line_end_x: num(14),
    })
}
