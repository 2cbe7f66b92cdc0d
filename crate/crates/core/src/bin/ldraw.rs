//! Command-line front end: draw graphs, evaluate and render layouts,
//! export solver models, generate random instances, and run benchmark
//! grids. Exit status 0 on success, 1 on usage errors, 2 on input errors.

use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ldrawing::exact::{exact_layout, ExactMethod};
use ldrawing::graph::{parse_graph, random_connected_gnm, DirectedGraph};
use ldrawing::incremental::{expand_run_seed, incremental_draw_traced};
use ldrawing::layout::{parse_layout, random_layout, InkBreakdown, Layout};
use ldrawing::lp::emit_lp;
use ldrawing::reduction::build_mild_instance;
use ldrawing::render::{render_svg, RenderStyle};
use ldrawing::suite::{derive_seed, run_suite, AlgorithmKind, SuiteSpec};
use ldrawing::{compute_ink, Axis, Error};

#[derive(Parser)]
#[command(
    name = "ldraw",
    version,
    about = "L-drawings of directed graphs with little ink"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    globals: Globals,
}

#[derive(Args)]
struct Globals {
    /// Master random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format for layouts and ink reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a graph with the incremental minimum-added-ink heuristic.
    Layout {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        /// Insertion-order start vertex; picked from the seed when absent.
        #[arg(long)]
        start: Option<String>,
        /// Write a per-insertion cost trace CSV to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Draw a graph with per-axis exact minimization.
    Exact {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "subset-dp")]
        method: Method,
        /// Lift the solver size guards.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Draw a graph with uniform random coordinate permutations.
    Random {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Evaluate the ink of an existing layout.
    Ink {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        /// Layout file with "label x y" lines.
        layout: PathBuf,
    },
    /// Export one axis of the minimization as a CPLEX LP model.
    EmitLp {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "x")]
        axis: AxisArg,
    },
    /// Generate weakly connected random graphs with a fixed edge budget.
    Gen {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Density percent; the graph gets n(n-1)*density/100 edges.
        #[arg(long)]
        density: u32,
        /// How many graphs; more than one requires --out-dir.
        #[arg(long, default_value_t = 1)]
        instances: usize,
        /// Write one numbered .edges file per graph into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Compare algorithms over a grid of sizes and densities; emits CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "10,20,30,70")]
        densities: Vec<u32>,
        /// Graphs per (size, density) cell.
        #[arg(long, default_value_t = 10)]
        instances: usize,
        /// Runs per graph for the randomized algorithms.
        #[arg(long, default_value_t = 50)]
        runs: usize,
        #[arg(
            long,
            value_delimiter = ',',
            value_enum,
            default_value = "incremental,exact,random"
        )]
        algorithms: Vec<Algo>,
        /// Lift the exact-solver size guard.
        #[arg(long)]
        force: bool,
        /// Fill time_ms with wall-clock measurements; off keeps the CSV
        /// byte-identical across repeated runs.
        #[arg(long)]
        times: bool,
        /// Write per-cell statistics JSON to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Build the drawing instance whose minimum ink encodes a profile
    /// budget for the input graph, read as undirected.
    Reduce {
        /// Graph file (edge list or digraph syntax), or "-" for stdin.
        graph: PathBuf,
        /// Profile budget to translate into an ink budget.
        #[arg(long)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumeration,
    SubsetDp,
}

impl From<Method> for ExactMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Enumeration => ExactMethod::Enumeration,
            Method::SubsetDp => ExactMethod::SubsetDp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Self {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Incremental,
    Exact,
    Random,
}

impl From<Algo> for AlgorithmKind {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Incremental => AlgorithmKind::Incremental,
            Algo::Exact => AlgorithmKind::Exact,
            Algo::Random => AlgorithmKind::Random,
        }
    }
}

/// Rendering flags shared by the drawing subcommands. Geometry flags
/// default to the built-in style.
#[derive(Args)]
struct SvgArgs {
    /// Write an SVG rendering to this file.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Pixels per grid unit.
    #[arg(long)]
    cell: Option<f64>,
    /// Bend junction radius in pixels.
    #[arg(long)]
    junction: Option<f64>,
    /// Vertex circle radius in pixels.
    #[arg(long)]
    vertex_radius: Option<f64>,
    /// Arrowhead length in pixels.
    #[arg(long)]
    arrow: Option<f64>,
    /// Stroke width in pixels.
    #[arg(long)]
    stroke: Option<f64>,
    /// Label font size in pixels.
    #[arg(long)]
    font: Option<f64>,
    /// Omit vertex labels.
    #[arg(long)]
    no_labels: bool,
}

impl SvgArgs {
    fn style(&self) -> RenderStyle {
        let d = RenderStyle::default();
        RenderStyle {
            cell: self.cell.unwrap_or(d.cell),
            junction: self.junction.unwrap_or(d.junction),
            vertex_radius: self.vertex_radius.unwrap_or(d.vertex_radius),
            arrow: self.arrow.unwrap_or(d.arrow),
            stroke: self.stroke.unwrap_or(d.stroke),
            font: self.font.unwrap_or(d.font),
            labels: !self.no_labels,
        }
    }
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Input(err)
    }
}

type CliResult = std::result::Result<(), Failure>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Input(err)) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn dispatch(cli: Cli) -> CliResult {
    let globals = cli.globals;
    match cli.command {
        Command::Layout {
            graph,
            start,
            trace,
            svg,
        } => cmd_layout(&globals, &graph, start.as_deref(), trace.as_deref(), &svg),
        Command::Exact {
            graph,
            method,
            force,
            svg,
        } => cmd_exact(&globals, &graph, method.into(), force, &svg),
        Command::Random { graph, svg } => cmd_random(&globals, &graph, &svg),
        Command::Ink { graph, layout } => cmd_ink(&globals, &graph, &layout),
        Command::EmitLp { graph, axis } => cmd_emit_lp(&globals, &graph, axis.into()),
        Command::Gen {
            n,
            density,
            instances,
            out_dir,
        } => cmd_gen(&globals, n, density, instances, out_dir.as_deref()),
        Command::Bench {
            sizes,
            densities,
            instances,
            runs,
            algorithms,
            force,
            times,
            summary,
        } => cmd_bench(
            &globals,
            sizes,
            densities,
            instances,
            runs,
            &algorithms,
            force,
            times,
            summary.as_deref(),
        ),
        Command::Reduce { graph, budget } => cmd_reduce(&globals, &graph, budget),
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &Path) -> Result<DirectedGraph, Error> {
    parse_graph(&read_input(path)?)
}

fn write_out(out: Option<&Path>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            use std::io::Write as _;
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Placement<'a> {
    id: &'a str,
    x: usize,
    y: usize,
}

#[derive(Serialize)]
struct LayoutReport<'a> {
    ink: u64,
    ink_x: u64,
    ink_y: u64,
    vertices: Vec<Placement<'a>>,
}

/// Writes the layout in the chosen format and the SVG if requested. The
/// text form starts with an ink comment so the file feeds straight back
/// into the `ink` subcommand.
fn emit_layout(
    globals: &Globals,
    g: &DirectedGraph,
    layout: &Layout,
    ink: &InkBreakdown,
    svg: &SvgArgs,
) -> CliResult {
    let body = match globals.format {
        Format::Text => {
            let mut text = format!("# ink {} x {} y {}\n", ink.ink, ink.ink_x, ink.ink_y);
            text.push_str(&layout.to_text(g));
            text
        }
        Format::Json => {
            let report = LayoutReport {
                ink: ink.ink,
                ink_x: ink.ink_x,
                ink_y: ink.ink_y,
                vertices: (0..g.vertex_count())
                    .map(|v| Placement {
                        id: g.label(v),
                        x: layout.x(v),
                        y: layout.y(v),
                    })
                    .collect(),
            };
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            text
        }
    };
    write_out(globals.out.as_deref(), &body)?;
    if let Some(path) = &svg.svg {
        let rendered = render_svg(g, layout, &svg.style())?;
        std::fs::write(path, rendered).map_err(Error::from)?;
    }
    Ok(())
}

fn cmd_layout(
    globals: &Globals,
    graph: &Path,
    start: Option<&str>,
    trace: Option<&Path>,
    svg: &SvgArgs,
) -> CliResult {
    let g = read_graph(graph)?;
    let n = g.vertex_count();
    if n == 0 {
        let layout = Layout::new(vec![], vec![])?;
        let ink = compute_ink(&g, &layout)?;
        return emit_layout(globals, &g, &layout, &ink, svg);
    }
    let (seeded_start, shuffle) = expand_run_seed(n, globals.seed);
    let start = match start {
        Some(label) => g
            .label_index(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))?,
        None => seeded_start,
    };
    let (layout, steps) = incremental_draw_traced(&g, start, shuffle)?;
    if let Some(path) = trace {
        let mut csv = String::from("step,vertex,x_pos,y_pos,add_ink_x,add_ink_y,ink_after\n");
        for (i, step) in steps.iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                i,
                g.label(step.vertex),
                step.x_pos,
                step.y_pos,
                step.add_ink_x,
                step.add_ink_y,
                step.ink_after
            ));
        }
        std::fs::write(path, csv).map_err(Error::from)?;
    }
    let ink = compute_ink(&g, &layout)?;
    emit_layout(globals, &g, &layout, &ink, svg)
}

fn cmd_exact(
    globals: &Globals,
    graph: &Path,
    method: ExactMethod,
    force: bool,
    svg: &SvgArgs,
) -> CliResult {
    let g = read_graph(graph)?;
    let (layout, ink) = exact_layout(&g, method, force)?;
    emit_layout(globals, &g, &layout, &ink, svg)
}

fn cmd_random(globals: &Globals, graph: &Path, svg: &SvgArgs) -> CliResult {
    let g = read_graph(graph)?;
    let layout = random_layout(g.vertex_count(), globals.seed);
    let ink = compute_ink(&g, &layout)?;
    emit_layout(globals, &g, &layout, &ink, svg)
}

fn cmd_ink(globals: &Globals, graph: &Path, layout: &Path) -> CliResult {
    let g = read_graph(graph)?;
    let layout = parse_layout(&read_input(layout)?, &g)?;
    let ink = compute_ink(&g, &layout)?;
    let body = match globals.format {
        Format::Text => format!("{}\n", ink.ink),
        Format::Json => {
            #[derive(Serialize)]
            struct InkReport {
                ink: u64,
                ink_x: u64,
                ink_y: u64,
            }
            let mut text = serde_json::to_string_pretty(&InkReport {
                ink: ink.ink,
                ink_x: ink.ink_x,
                ink_y: ink.ink_y,
            })
            .expect("report serializes");
            text.push('\n');
            text
        }
    };
    write_out(globals.out.as_deref(), &body)?;
    Ok(())
}

fn cmd_emit_lp(globals: &Globals, graph: &Path, axis: Axis) -> CliResult {
    let g = read_graph(graph)?;
    write_out(globals.out.as_deref(), &emit_lp(&g, axis))?;
    Ok(())
}

fn cmd_gen(
    globals: &Globals,
    n: usize,
    density: u32,
    instances: usize,
    out_dir: Option<&Path>,
) -> CliResult {
    if instances != 1 && out_dir.is_none() {
        return Err(Failure::Usage(
            "generating more than one graph requires --out-dir".into(),
        ));
    }
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(Error::from)?;
            for i in 0..instances {
                let g = random_connected_gnm(n, density, derive_seed(globals.seed, i as u64))?;
                let path = dir.join(format!("n{n}_p{density}_i{i}.edges"));
                std::fs::write(&path, g.to_edge_list()).map_err(Error::from)?;
                println!("{}", path.display());
            }
        }
        None => {
            let g = random_connected_gnm(n, density, derive_seed(globals.seed, 0))?;
            write_out(globals.out.as_deref(), &g.to_edge_list())?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    globals: &Globals,
    sizes: Vec<usize>,
    densities: Vec<u32>,
    instances: usize,
    runs: usize,
    algorithms: &[Algo],
    force: bool,
    times: bool,
    summary: Option<&Path>,
) -> CliResult {
    let spec = SuiteSpec {
        sizes,
        densities,
        instances,
        runs,
        algorithms: algorithms.iter().map(|&a| a.into()).collect(),
        seed: globals.seed,
        exact_force: force,
        measure_times: times,
    };
    let outcome = run_suite(&spec);
    for skip in &outcome.skipped {
        match skip.algorithm {
            Some(algorithm) => eprintln!(
                "skipped n={} p={} {}: {}",
                skip.n, skip.p, algorithm, skip.reason
            ),
            None => eprintln!("skipped n={} p={}: {}", skip.n, skip.p, skip.reason),
        }
    }
    write_out(globals.out.as_deref(), &outcome.csv())?;
    if let Some(path) = summary {
        std::fs::write(path, outcome.summary_json()).map_err(Error::from)?;
    }
    Ok(())
}

fn cmd_reduce(globals: &Globals, graph: &Path, budget: u64) -> CliResult {
    let g = read_graph(graph)?;
    let instance = build_mild_instance(&g, budget);
    write_out(globals.out.as_deref(), &instance.to_text())?;
    Ok(())
}
