//! `qmc`: verification, reproduction tables, parameter sweeps and timed
//! simulations of quantum arithmetic on monolithic and distributed machines.
//!
//! Every command produces a [`Table`]; the CLI layer only selects, runs and
//! formats. All numbers come from the library crates.

pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use config::{parse_config, RunConfig};
pub use output::{Format, Table, Value};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Adder(#[from] adders::AdderError),
    #[error(transparent)]
    ModExp(#[from] modexp::ModExpError),
    #[error(transparent)]
    Multinet(#[from] multinet::MultinetError),
    #[error(transparent)]
    Qec(#[from] qecrel::QecError),
    #[error(transparent)]
    Sim(#[from] revsim::SimError),
}

impl CliError {
    /// 0 success, 1 a check failed, 2 the request itself was bad.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qmc", version, about = "Quantum arithmetic latency models and reproduction tables")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exhaustively check the adder circuits and their gate counts.
    Verify {
        /// Largest width to check (at most 6).
        #[arg(long)]
        n_max: Option<String>,
        /// Check this circuit file instead of the generated circuits.
        #[arg(long)]
        circuit: Option<PathBuf>,
        /// Adder whose register map the circuit file follows.
        #[arg(long)]
        kind: Option<String>,
        /// Width of the circuit file.
        #[arg(long)]
        n: Option<String>,
    },
    /// Print one of the reproduction tables.
    Table {
        /// One of the names listed by `qmc table list`.
        name: String,
        /// Widths, comma separated (where the table takes a width).
        #[arg(long)]
        n: Option<String>,
    },
    /// Timed latency over a grid of widths and EPR times.
    Sweep {
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        epr_ns: Option<String>,
        #[arg(long)]
        adder: Option<String>,
        #[arg(long)]
        topology: Option<String>,
        #[arg(long)]
        method: Option<String>,
    },
    /// One timed distributed addition, and the full exponentiation built on it.
    Simulate {
        #[arg(long)]
        adder: Option<String>,
        #[arg(long)]
        topology: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        method: Option<String>,
        #[arg(long)]
        epr_ns: Option<String>,
        #[arg(long)]
        classical_ns: Option<String>,
        #[arg(long)]
        ccnot_ns: Option<String>,
        #[arg(long)]
        cnot_ns: Option<String>,
        #[arg(long)]
        not_ns: Option<String>,
    },
    /// Required teleportation error rates for error-correcting code stacks.
    Reliability {
        /// Code stacks, comma separated: none, 7, 23, 7+7, 23+7, ...
        #[arg(long)]
        code: Option<String>,
        /// Teleportation counts, comma separated.
        #[arg(long)]
        t: Option<String>,
        /// Acceptable failure probability of the whole run.
        #[arg(long)]
        target: Option<String>,
    },
}

impl Command {
    /// The flags given on the command line, as config entries.
    fn flags(&self) -> Vec<(&'static str, &str)> {
        let mut v = Vec::new();
        fn push<'a>(v: &mut Vec<(&'static str, &'a str)>, k: &'static str, x: &'a Option<String>) {
            if let Some(x) = x {
                v.push((k, x.as_str()));
            }
        }
        let mut add = |k, x| push(&mut v, k, x);
        match self {
            Command::Verify { n_max, kind, n, .. } => {
                add("n_max", n_max);
                add("kind", kind);
                add("n", n);
            }
            Command::Table { n, .. } => add("n", n),
            Command::Sweep { n, epr_ns, adder, topology, method } => {
                add("n", n);
                add("epr_ns", epr_ns);
                add("adder", adder);
                add("topology", topology);
                add("method", method);
            }
            Command::Simulate { adder, topology, n, method, epr_ns, classical_ns, ccnot_ns, cnot_ns, not_ns } => {
                add("adder", adder);
                add("topology", topology);
                add("n", n);
                add("method", method);
                add("epr_ns", epr_ns);
                add("classical_ns", classical_ns);
                add("ccnot_ns", ccnot_ns);
                add("cnot_ns", cnot_ns);
                add("not_ns", not_ns);
            }
            Command::Reliability { code, t, target } => {
                add("code", code);
                add("t", t);
                add("target", target);
            }
        }
        v
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

/// Merges the config file and the flags into a validated configuration.
pub fn resolve(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut raw = match &cli.config {
        Some(p) => parse_config(&read(p)?)?,
        None => Default::default(),
    };
    for (k, v) in cli.command.flags() {
        raw.insert(k.to_string(), v.to_string());
    }
    if let Command::Verify { circuit: Some(p), .. } = &cli.command {
        raw.insert("circuit".into(), p.display().to_string());
    }
    let mut cfg = RunConfig::from_raw(&raw)?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(o) = &cli.out {
        cfg.out = Some(o.clone());
    }
    Ok(cfg)
}

/// A command's table, and what failed if it was a check that did not pass.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub failure: Option<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome { table, failure: None }
    }
}

/// Runs a parsed command.
pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match command {
        Command::Verify { .. } => commands::verify::run(cfg),
        Command::Table { name, .. } => commands::tables::run(name, cfg).map(Outcome::from),
        Command::Sweep { .. } => commands::sweep::run(cfg).map(Outcome::from),
        Command::Simulate { .. } => commands::simulate::run(cfg).map(Outcome::from),
        Command::Reliability { .. } => commands::reliability::run(cfg).map(Outcome::from),
    }
}

/// Parses, runs and writes; returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let run = || -> Result<(), CliError> {
        let cfg = resolve(&cli)?;
        let outcome = execute(&cli.command, &cfg)?;
        let text = outcome.table.render(cfg.format);
        match &cfg.out {
            Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.clone(), source })?,
            None => print!("{text}"),
        }
        outcome.failure.map_or(Ok(()), |f| Err(CliError::Verification(f)))
    };
    match run() {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
