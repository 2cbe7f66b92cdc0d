//! Benchmark harness: generates random connected graphs over a grid of
//! sizes and densities, draws each with the competing algorithms, and
//! reports per-run records (CSV) plus per-cell statistics (JSON).
//!
//! All randomness flows from one master seed through a counter-based
//! derivation, so a suite is reproducible byte for byte. Runs execute in
//! parallel; records are collected in task order, which is fixed by the
//! spec alone, so parallelism never changes the output.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{exact_layout, ExactMethod, SUBSET_DP_GUARD};
use crate::graph::{gnm_edge_count, random_connected_gnm, DirectedGraph};
use crate::incremental::{expand_run_seed, incremental_draw};
use crate::layout::{compute_ink, random_layout, Layout};

/// One drawing algorithm under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmKind {
    /// Online insertion in randomized BFS order.
    Incremental,
    /// Per-axis exact optimum (subset dp), one run per instance.
    Exact,
    /// Uniform random axis permutations, the lower baseline.
    Random,
}

impl std::fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AlgorithmKind::Incremental => "incremental",
            AlgorithmKind::Exact => "exact",
            AlgorithmKind::Random => "random",
        })
    }
}

/// What to run: the cell grid, the per-cell volume, and the seed.
#[derive(Debug, Clone)]
pub struct SuiteSpec {
    pub sizes: Vec<usize>,
    /// Density percentages; a cell (n, p) gets `n(n-1)p/100` edges.
    pub densities: Vec<u32>,
    /// Graphs per cell.
    pub instances: usize,
    /// Runs per instance for the randomized algorithms.
    pub runs: usize,
    pub algorithms: Vec<AlgorithmKind>,
    pub seed: u64,
    /// Lift the exact-solver size guard.
    pub exact_force: bool,
    /// Fill `time_ms` with wall-clock measurements. Off by default so the
    /// CSV stays identical across repeated runs.
    pub measure_times: bool,
}

impl SuiteSpec {
    /// The suite shape used for the headline comparisons: sizes 5/10/15,
    /// densities 10/20/30/70, ten instances, fifty runs.
    pub fn standard(seed: u64) -> Self {
        Self {
            sizes: vec![5, 10, 15],
            densities: vec![10, 20, 30, 70],
            instances: 10,
            runs: 50,
            algorithms: vec![
                AlgorithmKind::Incremental,
                AlgorithmKind::Exact,
                AlgorithmKind::Random,
            ],
            seed,
            exact_force: false,
            measure_times: false,
        }
    }
}

/// One algorithm execution on one instance.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: AlgorithmKind,
    /// Derived per-run seed (0 for the deterministic exact solver).
    pub seed: u64,
    pub ink: u64,
    pub ink_x: u64,
    pub ink_y: u64,
    pub time_ms: u64,
    /// The produced drawing; `ink` fields are recomputable from it.
    pub layout: Layout,
}

/// Header of [`RunRecord::csv_row`] output.
pub const CSV_HEADER: &str = "graph_id,n,m,algorithm,seed,ink,ink_x,ink_y,time_ms";

impl RunRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.graph_id,
            self.n,
            self.m,
            self.algorithm,
            self.seed,
            self.ink,
            self.ink_x,
            self.ink_y,
            self.time_ms
        )
    }
}

/// Aggregates for one (cell, algorithm) pair.
#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub n: usize,
    pub p: u32,
    pub m: usize,
    pub algorithm: AlgorithmKind,
    pub runs: usize,
    pub mean_ink: f64,
    pub stddev_ink: f64,
    pub min_ink: u64,
    pub max_ink: u64,
    /// The ink every layout of the complete graph would use: `2n(n-1)`.
    pub theoretical_max: u64,
    /// `theoretical_max - mean_ink`, the saved-ink headroom.
    pub mean_saved: f64,
}

/// A cell (or one algorithm within a cell) that could not run.
#[derive(Debug, Clone, Serialize)]
pub struct CellSkip {
    pub n: usize,
    pub p: u32,
    /// Empty when the whole cell is skipped.
    pub algorithm: Option<AlgorithmKind>,
    pub reason: String,
}

/// Everything a suite produces.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub records: Vec<RunRecord>,
    pub cells: Vec<CellSummary>,
    pub skipped: Vec<CellSkip>,
    /// The generated instances, keyed like the records' `graph_id`.
    pub graphs: Vec<(String, DirectedGraph)>,
}

impl SuiteOutcome {
    /// All records as CSV, header included.
    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for record in &self.records {
            out.push_str(&record.csv_row());
            out.push('\n');
        }
        out
    }

    /// Per-cell statistics and skip reasons as pretty-printed JSON.
    pub fn summary_json(&self) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            cells: &'a [CellSummary],
            skipped: &'a [CellSkip],
        }
        let summary = Summary {
            cells: &self.cells,
            skipped: &self.skipped,
        };
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    }
}

/// Expands the master seed into an independent stream: a splitmix64-style
/// mix of the stream counter.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master.wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Task<'a> {
    graph_id: String,
    n: usize,
    m: usize,
    graph: &'a DirectedGraph,
    algorithm: AlgorithmKind,
    seed: u64,
}

fn execute(task: &Task, measure_times: bool) -> RunRecord {
    let started = Instant::now();
    let layout = match task.algorithm {
        AlgorithmKind::Incremental => {
            let (start, shuffle) = expand_run_seed(task.n, task.seed);
            incremental_draw(task.graph, start, shuffle).expect("suite graphs are connected")
        }
        AlgorithmKind::Exact => {
            exact_layout(task.graph, ExactMethod::SubsetDp, true)
                .expect("guard checked at task build")
                .0
        }
        AlgorithmKind::Random => random_layout(task.n, task.seed),
    };
    let time_ms = if measure_times {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    let ink = compute_ink(task.graph, &layout).expect("layout matches graph");
    RunRecord {
        graph_id: task.graph_id.clone(),
        n: task.n,
        m: task.m,
        algorithm: task.algorithm,
        seed: task.seed,
        ink: ink.ink,
        ink_x: ink.ink_x,
        ink_y: ink.ink_y,
        time_ms,
        layout,
    }
}

/// Runs the whole grid. Cells that cannot run (infeasible density, exact
/// guard exceeded) are reported in `skipped` and do not stop the rest.
pub fn run_suite(spec: &SuiteSpec) -> SuiteOutcome {
    let mut skipped = Vec::new();
    let mut graphs: Vec<(usize, u32, usize, String, DirectedGraph)> = Vec::new();
    for (ci, &n) in spec.sizes.iter().enumerate() {
        for (pi, &p) in spec.densities.iter().enumerate() {
            let cell_stream = (ci * spec.densities.len() + pi) as u64;
            let mut failed = false;
            for instance in 0..spec.instances {
                let stream = cell_stream * spec.instances as u64 + instance as u64;
                let seed = derive_seed(spec.seed, stream);
                match random_connected_gnm(n, p, seed) {
                    Ok(g) => {
                        let id = format!("n{n}_p{p}_i{instance}");
                        graphs.push((n, p, instance, id, g));
                    }
                    Err(err) => {
                        if !failed {
                            skipped.push(CellSkip {
                                n,
                                p,
                                algorithm: None,
                                reason: err.to_string(),
                            });
                            failed = true;
                        }
                    }
                }
            }
        }
    }

    // Per-run seed streams live above the generation streams.
    let gen_streams = (spec.sizes.len() * spec.densities.len() * spec.instances) as u64;
    let mut tasks: Vec<Task> = Vec::new();
    let mut guard_noted: Vec<(usize, u32)> = Vec::new();
    for (gi, (n, p, _instance, id, graph)) in graphs.iter().enumerate() {
        for &algorithm in &spec.algorithms {
            match algorithm {
                AlgorithmKind::Exact => {
                    if *n > SUBSET_DP_GUARD && !spec.exact_force {
                        if !guard_noted.contains(&(*n, *p)) {
                            guard_noted.push((*n, *p));
                            skipped.push(CellSkip {
                                n: *n,
                                p: *p,
                                algorithm: Some(AlgorithmKind::Exact),
                                reason: format!(
                                    "exact subset dp supports at most {SUBSET_DP_GUARD} vertices"
                                ),
                            });
                        }
                        continue;
                    }
                    tasks.push(Task {
                        graph_id: id.clone(),
                        n: *n,
                        m: graph.edge_count(),
                        graph,
                        algorithm,
                        seed: 0,
                    });
                }
                AlgorithmKind::Incremental | AlgorithmKind::Random => {
                    for run in 0..spec.runs {
                        let lane = match algorithm {
                            AlgorithmKind::Incremental => 0,
                            _ => 1,
                        };
                        let stream = gen_streams
                            + (gi as u64 * 2 + lane) * spec.runs as u64
                            + run as u64;
                        tasks.push(Task {
                            graph_id: id.clone(),
                            n: *n,
                            m: graph.edge_count(),
                            graph,
                            algorithm,
                            seed: derive_seed(spec.seed, stream),
                        });
                    }
                }
            }
        }
    }

    let records: Vec<RunRecord> = tasks
        .par_iter()
        .map(|task| execute(task, spec.measure_times))
        .collect();
    drop(tasks);

    let mut cells = Vec::new();
    for &n in &spec.sizes {
        for &p in &spec.densities {
            for &algorithm in &spec.algorithms {
                let inks: Vec<u64> = records
                    .iter()
                    .filter(|r| {
                        r.n == n && r.algorithm == algorithm && r.m == gnm_edge_count(n, p)
                            && r.graph_id.starts_with(&format!("n{n}_p{p}_"))
                    })
                    .map(|r| r.ink)
                    .collect();
                if inks.is_empty() {
                    continue;
                }
                let count = inks.len() as f64;
                let mean = inks.iter().sum::<u64>() as f64 / count;
                let variance =
                    inks.iter().map(|&v| (v as f64 - mean).powi(2)).sum::<f64>() / count;
                let theoretical_max = 2 * (n as u64) * (n as u64 - 1);
                cells.push(CellSummary {
                    n,
                    p,
                    m: gnm_edge_count(n, p),
                    algorithm,
                    runs: inks.len(),
                    mean_ink: mean,
                    stddev_ink: variance.sqrt(),
                    min_ink: *inks.iter().min().unwrap(),
                    max_ink: *inks.iter().max().unwrap(),
                    theoretical_max,
                    mean_saved: theoretical_max as f64 - mean,
                });
            }
        }
    }

    SuiteOutcome {
        records,
        cells,
        skipped,
        graphs: graphs.into_iter().map(|(_, _, _, id, g)| (id, g)).collect(),
    }
}
