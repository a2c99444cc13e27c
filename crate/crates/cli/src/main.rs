use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

mod commands;
mod render;

use commands::Outcome;

#[derive(Debug, Parser)]
#[command(
    name = "patternhom",
    version,
    about = "Count permutations avoiding consecutive patterns"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest length the exhaustive oracle will enumerate.
    #[arg(long, global = true, env = "PATTERNHOM_GUARD", default_value_t = patternhom::DEFAULT_GUARD)]
    pub guard: usize,

    /// Drop patterns containing another member instead of rejecting the set.
    #[arg(long, global = true)]
    pub reduce: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Avoider counts a_0 … a_n.
    Count(CountArgs),
    /// Chain counts c(n, q), optionally with every chain listed.
    Chains(TableArgs),
    /// Cluster counts cl(n, q), optionally with every cluster listed.
    Clusters(TableArgs),
    /// Smallest positive root of the kernel polynomial and the lower bound.
    Bound(BoundArgs),
    /// Compare two pattern sets by avoider counts or occurrence profiles.
    Equiv(EquivArgs),
    /// Self-overlaps of a single pattern.
    Overlap(OverlapArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Chains,
    Clusters,
    ClosedForm,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Patterns separated by ';', e.g. "132;231".
    #[arg(long)]
    pub patterns: String,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Chains)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub patterns: String,
    #[arg(long, default_value_t = 10)]
    pub max_len: usize,
    /// Include every object in the output.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("kernel_source")
        .required(true)
        .args(["patterns", "kernel_coeffs"])
))]
pub struct BoundArgs {
    #[arg(long)]
    pub patterns: Option<String>,
    /// Factorially normalized coefficients n!·[tⁿ], comma separated,
    /// starting "1,-1".
    #[arg(long, allow_hyphen_values = true)]
    pub kernel_coeffs: Option<String>,
    /// Also report the lower bound α^(-n)·n! at this length.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = patternhom::roots::DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Wilf,
    Full,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Mode::Wilf)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct OverlapArgs {
    #[arg(long)]
    pub pattern: String,
}

#[derive(Debug, Serialize)]
struct RunReport {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    patterns: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<String>,
    params: Value,
    result: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notices: Vec<String>,
    wall_time_secs: f64,
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Count(_) => "count",
        Command::Chains(_) => "chains",
        Command::Clusters(_) => "clusters",
        Command::Bound(_) => "bound",
        Command::Equiv(_) => "equiv",
        Command::Overlap(_) => "overlap",
    }
}

fn emit_error(command: Option<&str>, kind: &str, message: &str) {
    let body = json!({ "error": { "command": command, "kind": kind, "message": message } });
    eprintln!("{body}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            emit_error(None, "usage", e.to_string().trim_end());
            return ExitCode::from(2);
        }
    };
    let name = command_name(&cli.command);

    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            emit_error(Some(name), "threads", &e.to_string());
            return ExitCode::FAILURE;
        }
    }

    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Count(a) => commands::count(a, &cli.global),
        Command::Chains(a) => commands::chains(a, &cli.global),
        Command::Clusters(a) => commands::clusters(a, &cli.global),
        Command::Bound(a) => commands::bound(a, &cli.global),
        Command::Equiv(a) => commands::equiv(a, &cli.global),
        Command::Overlap(a) => commands::overlap(a),
    };
    let Outcome {
        patterns,
        method,
        params,
        result,
        notices,
        pretty,
    } = match outcome {
        Ok(o) => o,
        Err(e) => {
            emit_error(Some(name), commands::error_kind(&e), &e.to_string());
            return ExitCode::FAILURE;
        }
    };
    let report = RunReport {
        command: name,
        patterns,
        method,
        params,
        result,
        notices,
        wall_time_secs: start.elapsed().as_secs_f64(),
    };

    if cli.global.pretty {
        print!(
            "{}",
            render::pretty(
                report.command,
                report.patterns.as_deref(),
                &report.notices,
                &pretty
            )
        );
    } else {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    }
    ExitCode::SUCCESS
}
