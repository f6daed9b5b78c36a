use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use surplus_cli::commands::{self, read_graph, write_output};
use surplus_cli::experiment::run_experiment;
use surplus_cli::{CPolicy, CliError, CliResult, CutOptions, ExperimentSpec, Family, Format, GenParams, Method, SweepFamily};
use surplus_core::edgelist::format_edge_list;

#[derive(Parser)]
#[command(name = "surplus-cut", version, about = "Max-Cut surplus bounds and cuts for locally sparse graphs")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family as an edge list.
    Gen(GenArgs),
    /// Per-vertex sparsity audit and the least sparsity constant.
    Audit(AuditArgs),
    /// Round the vector embedding to a cut.
    Cut(CutArgs),
    /// Every applicable surplus bound.
    Bounds(BoundsArgs),
    /// Sweep a family over sizes and fit the growth exponent.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    path: PathBuf,
    #[arg(long)]
    eps: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CutArgs {
    path: PathBuf,
    #[arg(long)]
    eps: f64,
    /// Sparsity constant, or `auto` for the audited minimum.
    #[arg(long, default_value = "auto")]
    c: CPolicy,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    local_search: bool,
    #[arg(long, value_enum, default_value_t = Method::Embedding)]
    method: Method,
    /// Threshold multiplier for `--method dichotomy`.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    /// Cut file (default: printed before the summary).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    path: PathBuf,
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value = "auto")]
    c: CPolicy,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    family: SweepFamily,
    /// Comma-separated sizes: vertex counts, or primes q for dgt/polarity.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    sizes: Vec<u64>,
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value = "auto")]
    c: CPolicy,
    /// Rounding trials per instance (0 skips rounding).
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    local_search: bool,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Add per-phase wall-time columns (not reproducible).
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write_output(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::internal(format!("cannot start thread pool: {e}")))?;
    }
    match cli.command {
        Command::Gen(a) => {
            let params = GenParams {
                n: a.n,
                p: a.p,
                seed: a.seed,
                q: a.q,
                k: a.k,
                s: a.s,
                t: a.t,
            };
            let g = commands::generate(a.family, &params)?;
            emit(a.out.as_ref(), &format_edge_list(&g))
        }
        Command::Audit(a) => {
            let g = read_graph(&a.path)?;
            emit(a.out.as_ref(), &commands::audit(&g, a.eps, a.format)?)
        }
        Command::Cut(a) => {
            let g = read_graph(&a.path)?;
            let opts = CutOptions {
                epsilon: a.eps,
                c: a.c,
                trials: a.trials,
                seed: a.seed,
                local_search: a.local_search,
                method: a.method,
                scale: a.scale,
            };
            let run = commands::run_cut(&g, &opts)?;
            let summary = run.summary.render(a.format);
            match &a.out {
                Some(path) => {
                    write_output(path, &run.cut.to_text())?;
                    print!("{summary}");
                }
                None => print!("{}{summary}", run.cut.to_text()),
            }
            Ok(())
        }
        Command::Bounds(a) => {
            let g = read_graph(&a.path)?;
            emit(a.out.as_ref(), &commands::bounds_report(&g, a.eps, a.c, a.format)?)
        }
        Command::Experiment(a) => {
            let spec = ExperimentSpec {
                family: a.family,
                sizes: a.sizes,
                epsilon: a.eps,
                c: a.c,
                trials: a.trials,
                seed: a.seed,
                local_search: a.local_search,
                p: a.p,
                k: a.k,
                alpha: a.alpha,
            };
            let output = run_experiment(&spec)?;
            emit(a.out.as_ref(), &output.render(a.format, a.timings))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind.code() as u8)
        }
    }
}
