//! `rankability`: spectral rankability analysis of match data.
//!
//! Exit codes: 0 success, 2 input/parse errors, 3 capability limits
//! (graph too large for exhaustive search), 4 numerical non-convergence.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rankability::ingest::{round_by_round_reports, WeightMode};
use rankability::spectral::{self, Spectrum};
use rankability::{
    backward_predictability, build_digraph, edge_r_exact, parse_matches, rating_correlation,
    run_elo, spec_r, Digraph, EloConfig, Error, RoundSeries,
};
use report::{complex_value, to_json, to_tsv, Value};

#[derive(Parser)]
#[command(
    name = "rankability",
    version,
    about = "Rankability of pairwise-comparison data via Laplacian spectra",
    after_help = "Data files are match CSVs: round,entity_a,entity_b,score_a,score_b[,home].\n\
                  See data/README.md in the source tree for shipped reference datasets."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Winning percentage against the pair's full-season schedule.
    Wp,
    /// Winning percentage over games played so far.
    WpSofar,
    /// Binary win/loss edges (draws rejected).
    Binary,
}

impl From<ModeArg> for WeightMode {
    fn from(m: ModeArg) -> WeightMode {
        match m {
            ModeArg::Wp => WeightMode::WinningPercentage,
            ModeArg::WpSofar => WeightMode::WinningPercentageSoFar,
            ModeArg::Binary => WeightMode::Binary,
        }
    }
}

fn mode_name(m: ModeArg) -> &'static str {
    match m {
        ModeArg::Wp => "wp",
        ModeArg::WpSofar => "wp-sofar",
        ModeArg::Binary => "binary",
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectral-degree rankability of a match file.
    Spec {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Wp)]
        mode: ModeArg,
        /// Analyze only matches up to this round (default: all rounds).
        #[arg(long)]
        through_round: Option<u32>,
    },
    /// Exact edge-change rankability (binary weights, exhaustive search).
    Edge {
        file: PathBuf,
        /// Vertex cap for the n! permutation scan.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Round-by-round rankability series.
    Rounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Wp)]
        mode: ModeArg,
    },
    /// Elo ratings, rating correlation and backward predictability.
    Elo {
        file: PathBuf,
        /// Elo k-factor (40 is conventional for chess, 32 for football).
        #[arg(long)]
        k: f64,
        /// Logistic scale (400 for chess, 1000 for football).
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 0.0)]
        home_advantage: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Wp)]
        mode: ModeArg,
    },
    /// Structural analysis: components, acyclicity, cycle counts.
    Graph {
        file: PathBuf,
        /// List the simple cycles (capped at 100).
        #[arg(long)]
        cycles: bool,
        /// List the strongly connected components.
        #[arg(long)]
        scc: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Lib(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Io(..) => 2,
        CliError::Lib(Error::TooManyVertices { .. }) => 3,
        CliError::Lib(Error::NonConvergence { .. }) => 4,
        CliError::Lib(_) => 2,
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let envelope = match &cli.command {
        Command::Spec {
            file,
            mode,
            through_round,
        } => cmd_spec(file, *mode, *through_round)?,
        Command::Edge { file, max_n } => cmd_edge(file, *max_n)?,
        Command::Rounds { file, mode } => cmd_rounds(file, *mode)?,
        Command::Elo {
            file,
            k,
            xi,
            home_advantage,
            mode,
        } => cmd_elo(file, *k, *xi, *home_advantage, *mode)?,
        Command::Graph { file, cycles, scc } => cmd_graph(file, *cycles, *scc)?,
    };
    Ok(match cli.format {
        Format::Json => to_json(&envelope),
        Format::Tsv => to_tsv(&envelope),
    })
}

fn load_series(path: &Path) -> Result<RoundSeries, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(parse_matches(&text)?)
}

fn envelope(command: &str, inputs: Value, results: Value) -> Value {
    let mut v = Value::object();
    v.push("command", Value::Str(command.into()));
    v.push("inputs", inputs);
    v.push("results", results);
    v.push("tool_version", Value::Str(env!("CARGO_PKG_VERSION").into()));
    v
}

fn spectrum_value(s: &Spectrum) -> Value {
    Value::List(s.values().iter().map(|c| complex_value(c.re, c.im)).collect())
}

fn cmd_spec(file: &Path, mode: ModeArg, through_round: Option<u32>) -> Result<Value, CliError> {
    let series = load_series(file)?;
    let through = through_round.unwrap_or_else(|| series.max_round());
    let g = build_digraph(&series, through, mode.into())?;
    let r = spec_r(&g)?;

    let mut inputs = Value::object();
    inputs.push("file", Value::Str(file.display().to_string()));
    inputs.push("mode", Value::Str(mode_name(mode).into()));
    inputs.push("through_round", Value::Int(through as i64));

    let mut results = Value::object();
    results.push("n", Value::Int(r.n as i64));
    results.push("spec_r", Value::Float(r.spec_r));
    results.push("hd_degree", Value::Float(r.hd_degree));
    results.push("hd_laplacian", Value::Float(r.hd_laplacian));
    results.push("entities", Value::strs(series.entities().iter().cloned()));
    results.push("degree_spectrum", spectrum_value(&r.degree_spectrum));
    results.push("laplacian_spectrum", spectrum_value(&r.laplacian_spectrum));
    Ok(envelope("spec", inputs, results))
}

fn cmd_edge(file: &Path, max_n: usize) -> Result<Value, CliError> {
    let series = load_series(file)?;
    let g = build_digraph(&series, series.max_round(), WeightMode::Binary)?;
    let r = edge_r_exact(&g, max_n)?;

    let mut inputs = Value::object();
    inputs.push("file", Value::Str(file.display().to_string()));
    inputs.push("max_n", Value::Int(max_n as i64));

    let mut results = Value::object();
    results.push("n", Value::Int(g.n() as i64));
    results.push("k", Value::Int(r.k as i64));
    results.push("p", Value::Int(r.p as i64));
    results.push("k_max", Value::Int(r.k_max as i64));
    results.push("p_max", Value::Int(r.p_max as i64));
    results.push("edge_r", Value::Float(r.edge_r));
    let orders: Vec<Value> = r
        .optimal_orders
        .iter()
        .map(|order| Value::strs(order.iter().map(|&v| g.label_of(v))))
        .collect();
    results.push("optimal_orders", Value::List(orders));
    Ok(envelope("edge", inputs, results))
}

fn cmd_rounds(file: &Path, mode: ModeArg) -> Result<Value, CliError> {
    let series = load_series(file)?;
    let reports = round_by_round_reports(&series, mode.into())?;

    let mut inputs = Value::object();
    inputs.push("file", Value::Str(file.display().to_string()));
    inputs.push("mode", Value::Str(mode_name(mode).into()));

    let rows: Vec<Value> = reports
        .iter()
        .map(|(round, r)| {
            let mut row = Value::object();
            row.push("round", Value::Int(*round as i64));
            row.push("spec_r", Value::Float(r.spec_r));
            row.push("hd_degree", Value::Float(r.hd_degree));
            row.push("hd_laplacian", Value::Float(r.hd_laplacian));
            row
        })
        .collect();
    let mut results = Value::object();
    results.push("rounds", Value::Int(reports.len() as i64));
    results.push("series", Value::List(rows));
    Ok(envelope("rounds", inputs, results))
}

fn cmd_elo(
    file: &Path,
    k: f64,
    xi: f64,
    home_advantage: f64,
    mode: ModeArg,
) -> Result<Value, CliError> {
    let series = load_series(file)?;
    if series.is_empty() {
        return Err(Error::EmptySeries.into());
    }
    let cfg = EloConfig {
        k_factor: k,
        xi,
        initial_rating: 0.0,
        home_advantage,
    };
    let table = run_elo(&series, &cfg)?;
    let correlation = rating_correlation(&table)?;
    let predictability = match backward_predictability(&table, &series, &cfg) {
        Ok(p) => Value::Float(p),
        Err(Error::NoDecidedMatches) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let g = build_digraph(&series, series.max_round(), mode.into())?;
    let rank = spec_r(&g)?;

    let mut inputs = Value::object();
    inputs.push("file", Value::Str(file.display().to_string()));
    inputs.push("k", Value::Float(k));
    inputs.push("xi", Value::Float(xi));
    inputs.push("home_advantage", Value::Float(home_advantage));
    inputs.push("mode", Value::Str(mode_name(mode).into()));

    let ratings: Vec<Value> = table
        .entities()
        .iter()
        .zip(table.current())
        .map(|(name, rating)| {
            let mut row = Value::object();
            row.push("entity", Value::Str(name.clone()));
            row.push("rating", Value::Float(*rating));
            row
        })
        .collect();
    let mut results = Value::object();
    results.push("rounds", Value::Int(table.rounds() as i64));
    results.push("final_ratings", Value::List(ratings));
    results.push("rating_correlation", Value::Float(correlation));
    results.push("backward_predictability", predictability);
    results.push("spec_r", Value::Float(rank.spec_r));
    Ok(envelope("elo", inputs, results))
}

fn cmd_graph(file: &Path, list_cycles: bool, list_scc: bool) -> Result<Value, CliError> {
    const CYCLE_LIST_CAP: usize = 100;
    let series = load_series(file)?;
    let g = build_digraph(&series, series.max_round(), WeightMode::WinningPercentage)?;
    let decomposition = g.scc();
    let spectrum = Spectrum::from_matrix(&g.laplacian())?;
    let tol = spectral::MULT_TOL * g.laplacian().norm_inf().max(1.0);
    let cycles = g.simple_cycles(Some(if list_cycles { CYCLE_LIST_CAP } else { 0 }));

    let mut inputs = Value::object();
    inputs.push("file", Value::Str(file.display().to_string()));
    inputs.push("cycles", Value::Bool(list_cycles));
    inputs.push("scc", Value::Bool(list_scc));

    let mut results = Value::object();
    results.push("n", Value::Int(g.n() as i64));
    results.push("acyclic", Value::Bool(g.is_acyclic()));
    results.push(
        "scc_count",
        Value::Int(decomposition.components.len() as i64),
    );
    results.push(
        "isolated_components",
        Value::Int(decomposition.isolated_count() as i64),
    );
    results.push(
        "zero_eigenvalue_multiplicity",
        Value::Int(spectrum.zero_multiplicity(tol) as i64),
    );
    results.push("cycle_count", Value::Int(cycles.count as i64));
    results.push("cycle_count_truncated", Value::Bool(cycles.truncated));
    if list_scc {
        let comps: Vec<Value> = decomposition
            .components
            .iter()
            .zip(&decomposition.isolated_flags)
            .map(|(comp, iso)| {
                let mut row = Value::object();
                row.push(
                    "vertices",
                    Value::strs(comp.iter().map(|&v| g.label_of(v))),
                );
                row.push("isolated", Value::Bool(*iso));
                row
            })
            .collect();
        results.push("components", Value::List(comps));
    }
    if list_cycles {
        let listed: Vec<Value> = cycles
            .cycles
            .iter()
            .map(|cycle| Value::strs(cycle.iter().map(|&v| g.label_of(v))))
            .collect();
        results.push("cycles", Value::List(listed));
        results.push(
            "cycles_listed",
            Value::Int(cycles.cycles.len() as i64),
        );
    }
    Ok(envelope("graph", inputs, results))
}
