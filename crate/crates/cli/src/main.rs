//! `hymis`: reduce, solve and inspect maximum strong independent set instances.

mod batch;
mod files;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hymis::exact::{find_violation, solve_exact_with, DEFAULT_MAX_VERTICES};
use hymis::io::{
    parse_hmetis, parse_map, parse_solution, parse_trace, write_hmetis, write_map,
    write_metis_graph, write_solution, write_stats, write_trace,
};
use hymis::{
    clique_expand, export_lp_graph, export_lp_hypergraph, lift_solution, reduce, ExactConfig,
    Hypergraph, ReducerConfig, ReductionKind, StatsReport, VertexId,
};

pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFY_FAILED: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const STRUCTURE: u8 = 3;
    pub const RESOURCE_LIMIT: u8 = 4;
    pub const OTHER: u8 = 5;
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn core(e: hymis::Error) -> Self {
        let code = match e {
            hymis::Error::Parse { .. } => exit::PARSE,
            hymis::Error::Structure(_) => exit::STRUCTURE,
            hymis::Error::ResourceLimit(_) => exit::RESOURCE_LIMIT,
            hymis::Error::InvalidSolution(_) => exit::VERIFY_FAILED,
            hymis::Error::InvalidArgument(_) => exit::OTHER,
        };
        CliError::new(code, e.to_string())
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::new(exit::OTHER, format!("{}: {e}", path.display()))
    }

    pub fn context(mut self, path: &Path) -> Self {
        self.message = format!("{}: {}", path.display(), self.message);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "hymis",
    version,
    about = "Data reduction and exact solving for maximum strong independent sets in hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an instance to its kernel, or every instance of a directory with --dir.
    Reduce(ReduceArgs),
    /// Solve an instance exactly, optionally lifting a kernel solution back.
    Solve(SolveArgs),
    /// Write the clique expansion as a METIS graph.
    Expand {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export a binary program in CPLEX LP format.
    ExportIlp {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Hypergraph)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that a solution is strongly independent (exit 0) or name a violated edge (exit 1).
    Verify { input: PathBuf, solution: PathBuf },
    /// Reduce in memory and print the statistics as JSON.
    Stats {
        input: PathBuf,
        #[command(flatten)]
        reducer: ReducerArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// One constraint per hyperedge.
    Hypergraph,
    /// One constraint per edge of the clique expansion.
    Graph,
}

#[derive(Args, Clone)]
pub struct ReducerArgs {
    /// Comma-separated rule names to enable (default: all).
    #[arg(long, value_delimiter = ',')]
    rules: Option<Vec<String>>,
    /// Stop reducing after this many seconds; the partial kernel is still valid.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
    /// Disable the unconfined-vertex rule (faster, larger kernels).
    #[arg(long)]
    no_unconfined: bool,
}

impl ReducerArgs {
    pub fn config(&self) -> Result<ReducerConfig, CliError> {
        let mut cfg = match &self.rules {
            None => ReducerConfig::default(),
            Some(names) => {
                let kinds = names
                    .iter()
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<ReductionKind>())
                    .collect::<hymis::Result<Vec<_>>>()
                    .map_err(CliError::core)?;
                ReducerConfig::from_unordered(kinds)
            }
        };
        if let Some(secs) = self.time_limit {
            cfg = cfg.with_time_limit(seconds(secs)?);
        }
        if self.no_unconfined {
            cfg = cfg.with_unconfined(false);
        }
        Ok(cfg)
    }
}

#[derive(Args)]
struct ReduceArgs {
    /// Input hypergraph in hMetis format.
    #[arg(required_unless_present = "dir", conflicts_with = "dir")]
    input: Option<PathBuf>,
    /// Kernel output path; with --dir, the output directory.
    #[arg(long)]
    out: PathBuf,
    /// Trace output (default: <out>.trace.jsonl).
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Statistics output (default: <out>.stats.json).
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Reduce every *.hgr file in this directory concurrently.
    #[arg(long)]
    dir: Option<PathBuf>,
    #[command(flatten)]
    reducer: ReducerArgs,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    /// Treat the input as a kernel and lift its solution through this trace.
    #[arg(long, value_name = "TRACE")]
    lift: Option<PathBuf>,
    /// Kernel-to-original id map used with --lift (default: <input>.map).
    #[arg(long, requires = "lift")]
    map: Option<PathBuf>,
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
    /// Largest instance solved without a time limit.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    #[arg(long)]
    out: PathBuf,
}

fn seconds(secs: f64) -> Result<Duration, CliError> {
    Duration::try_from_secs_f64(secs)
        .map_err(|_| CliError::new(exit::OTHER, format!("invalid time limit `{secs}`")))
}

/// Reduces `input` and writes the kernel, map, trace and stats files.
pub fn reduce_file(
    input: &Path,
    cfg: &ReducerConfig,
    out: &Path,
    trace: &Path,
    stats: &Path,
) -> Result<StatsReport, CliError> {
    let h = files::load(input, parse_hmetis)?;
    let result = reduce(h.clone(), cfg).map_err(|e| CliError::core(e).context(input))?;
    let report = StatsReport::new(&h, &result);
    let kernel = write_hmetis(&result.kernel.hypergraph).map_err(CliError::core)?;
    files::write_atomic(out, &kernel)?;
    files::write_atomic(
        &files::sibling(out, "map"),
        &write_map(&result.kernel.vertex_map),
    )?;
    files::write_atomic(trace, &write_trace(&result.trace))?;
    files::write_atomic(stats, &write_stats(&report))?;
    Ok(report)
}

fn run_reduce(args: ReduceArgs) -> Result<(), CliError> {
    let cfg = args.reducer.config()?;
    if let Some(dir) = &args.dir {
        return batch::run(dir, &args.out, &cfg);
    }
    let input = args.input.expect("clap enforces input or --dir");
    let trace = args
        .trace
        .unwrap_or_else(|| files::sibling(&args.out, "trace.jsonl"));
    let stats = args
        .stats
        .unwrap_or_else(|| files::sibling(&args.out, "stats.json"));
    let s = reduce_file(&input, &cfg, &args.out, &trace, &stats)?;
    println!(
        "n={} m={} -> n_r={} m_r={} offset={} t={:.3}s{}",
        s.n,
        s.m,
        s.n_r,
        s.m_r,
        s.offset,
        s.t,
        if s.timed_out { " (time limit hit)" } else { "" }
    );
    Ok(())
}

fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let h = files::load(&args.input, parse_hmetis)?;
    let cfg = ExactConfig {
        max_vertices: args.max_vertices,
        time_limit: args.time_limit.map(seconds).transpose()?,
    };
    let mut solution =
        solve_exact_with(&h, &cfg).map_err(|e| CliError::core(e).context(&args.input))?;
    if let Some(trace_path) = &args.lift {
        let trace = files::load(trace_path, parse_trace)?;
        let map_path = args
            .map
            .clone()
            .unwrap_or_else(|| files::sibling(&args.input, "map"));
        let map = files::load(&map_path, parse_map)?;
        let original = to_original(&solution.members, &map).map_err(|e| e.context(&map_path))?;
        let optimal = solution.optimal;
        solution = lift_solution(&trace, &original);
        solution.optimal = optimal;
    }
    files::write_atomic(&args.out, &write_solution(&solution.members))?;
    println!("{}", solution.cardinality());
    if !solution.optimal {
        eprintln!("time limit reached; solution may not be maximum");
    }
    Ok(())
}

fn to_original(kernel_ids: &[VertexId], map: &[VertexId]) -> Result<Vec<VertexId>, CliError> {
    kernel_ids
        .iter()
        .map(|v| {
            map.get(v.get() as usize - 1).copied().ok_or_else(|| {
                CliError::new(
                    exit::PARSE,
                    format!("kernel vertex {v} is missing from the map"),
                )
            })
        })
        .collect()
}

fn run_verify(input: &Path, solution: &Path) -> Result<(), CliError> {
    let h = files::load(input, parse_hmetis)?;
    let members = files::load(solution, parse_solution)?;
    match find_violation(&h, &members) {
        Ok(None) => {
            println!("independent, cardinality {}", members.len());
            Ok(())
        }
        Ok(Some(e)) => {
            let pins: Vec<String> = h
                .pins(e)
                .iter()
                .filter(|p| members.contains(p))
                .map(|p| p.to_string())
                .collect();
            Err(CliError::new(
                exit::VERIFY_FAILED,
                format!(
                    "not independent: edge {e} contains vertices {}",
                    pins.join(", ")
                ),
            ))
        }
        Err(e) => Err(CliError::new(
            exit::VERIFY_FAILED,
            format!("not a valid solution: {e}"),
        )),
    }
}

fn load_instance(path: &Path) -> Result<Hypergraph, CliError> {
    files::load(path, parse_hmetis)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Reduce(args) => run_reduce(args),
        Command::Solve(args) => run_solve(args),
        Command::Expand { input, out } => {
            let (g, _) = clique_expand(&load_instance(&input)?);
            files::write_atomic(&out, &write_metis_graph(&g))
        }
        Command::ExportIlp { input, mode, out } => {
            let h = load_instance(&input)?;
            let lp = match mode {
                Mode::Hypergraph => export_lp_hypergraph(&h),
                Mode::Graph => export_lp_graph(&clique_expand(&h).0),
            };
            files::write_atomic(&out, &lp)
        }
        Command::Verify { input, solution } => run_verify(&input, &solution),
        Command::Stats { input, reducer } => {
            let cfg = reducer.config()?;
            let h = load_instance(&input)?;
            let result = reduce(h.clone(), &cfg).map_err(|e| CliError::core(e).context(&input))?;
            print!("{}", write_stats(&StatsReport::new(&h, &result)));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("hymis: {e}");
            ExitCode::from(e.code)
        }
    }
}
