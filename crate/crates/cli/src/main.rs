use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use multloop_core::report::document_json;
use multloop_core::sampling::DEFAULT_SEED;
use multloop_core::verify::{catalog_listing, run_target, RunConfig};

#[derive(Parser)]
#[command(name = "multloop", version, about = "Checks for 3-dimensional topological loops and their multiplication groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List algebras, group laws, loop families, cases and obstructions.
    Catalog {
        /// Case-insensitive substring of the entry name.
        #[arg(default_value = "")]
        filter: String,
    },
    /// Run a check suite and emit JSON reports.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// algebra:<name|all>, group:<name|all>, loop:<family>:<param>=<expr>,
    /// loop:section:case<i>, kepka:case<i>, obstruction:<name|all>,
    /// niemenmaa:<pair|all>, lemma:functional, repro:all
    target: String,
    /// Defaults to $MULTLOOP_SEED, then 1729.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Half-width of the sampling cube.
    #[arg(long = "box", default_value_t = 2.0)]
    half_width: f64,
    #[arg(long)]
    tol_grp: Option<f64>,
    #[arg(long)]
    tol_loop: Option<f64>,
    #[arg(long)]
    tol_fd: Option<f64>,
    #[arg(long)]
    delta_obs: Option<f64>,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Record per-report runtimes (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn seed_from_env() -> Result<Option<u64>, String> {
    match std::env::var("MULTLOOP_SEED") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| format!("MULTLOOP_SEED is not an integer: {s:?}")),
        Err(_) => Ok(None),
    }
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let env_seed = match seed_from_env() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return Ok(ExitCode::from(2));
        }
    };
    let d = RunConfig::default();
    let cfg = RunConfig {
        seed: args.seed.or(env_seed).unwrap_or(DEFAULT_SEED),
        samples: args.samples,
        half_width: args.half_width,
        tol_grp: args.tol_grp.unwrap_or(d.tol_grp),
        tol_loop: args.tol_loop.unwrap_or(d.tol_loop),
        tol_fd: args.tol_fd.unwrap_or(d.tol_fd),
        delta_obs: args.delta_obs.unwrap_or(d.delta_obs),
        timings: args.timings,
    };
    let reports = match run_target(&args.target, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let doc = document_json(&args.target, cfg.seed, &reports);
    let matched = reports.iter().filter(|r| r.matched()).count();
    match &args.json {
        Some(path) => {
            std::fs::write(path, &doc).with_context(|| format!("writing {}", path.display()))?;
            let mut out = String::new();
            for r in &reports {
                let mark = if r.matched() { "ok  " } else { "MISMATCH" };
                let (check, case, exp) = (&r.check, &r.case, r.expected.as_str());
                let _ = writeln!(out, "{mark} {check:<20} {case:<24} expected {exp:<4} residual {:.3e}", r.max_residual);
            }
            emit(&out)?;
        }
        None => emit(&doc)?,
    }
    eprintln!("{matched}/{} reports matched their expectation", reports.len());
    Ok(if matched == reports.len() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog { filter } => {
            let mut out = String::new();
            for e in catalog_listing(&filter) {
                let _ = writeln!(out, "{:<12} {:<22} dim {}  {}", e.kind, e.name, e.dim, e.description);
            }
            emit(&out).map(|_| ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
