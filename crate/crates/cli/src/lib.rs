//! Command-line front end for epslab: reads ring/ideal instance files and
//! prints sequence tables, estimates and check reports.

pub mod commands;
pub mod error;
pub mod expr;
pub mod instance;
pub mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{Cache, Command};
use error::{CliError, CliResult};
use instance::{parse_instance, parse_tolerance, Instance, Params};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "epslab", version, about = "Epsilon and Amao multiplicity sequences of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Ring dimension, nilradical and hypothesis flags.
    Info { instance: PathBuf },
    /// Lengths of (I^n)^sat / I^n with limit estimates.
    Epsilon { instance: PathBuf },
    /// Inner Amao sequences for each m and the trend of â(m)/m^d.
    Amao { instance: PathBuf },
    /// Compare the epsilon estimate with the Amao trend.
    VmCheck { instance: PathBuf },
    /// Linear constants b and c for the saturated powers.
    Swanson { instance: PathBuf },
    /// The five nilradical decomposition sequences.
    Decompose { instance: PathBuf },
    /// Identity checks on one instance, or the seeded random suite.
    Verify { instance: Option<PathBuf> },
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Largest power n (default 8).
    #[arg(long, global = true)]
    pub nmax: Option<u32>,
    /// Largest m in the Amao grid (default 3).
    #[arg(long, global = true)]
    pub mmax: Option<u32>,
    /// Largest k per Amao sequence (default 6).
    #[arg(long, global = true)]
    pub kmax: Option<u32>,
    /// Largest Swanson constant tried (default 8).
    #[arg(long, global = true)]
    pub bmax: Option<u32>,
    /// Seed of the random suite (default 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Relative tolerance, e.g. `1/20` or `0.05`.
    #[arg(long, global = true)]
    pub tolerance: Option<String>,
    /// csv, md or json.
    #[arg(long, global = true, default_value = "csv")]
    pub output: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Exit with code 3 when dim N is not below dim R.
    #[arg(long, global = true)]
    pub require_hypothesis: bool,
    /// JSON file of computed lengths, read and extended by epsilon and amao.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

impl Cmd {
    fn split(&self) -> (Command, Option<&PathBuf>) {
        match self {
            Cmd::Info { instance } => (Command::Info, Some(instance)),
            Cmd::Epsilon { instance } => (Command::Epsilon, Some(instance)),
            Cmd::Amao { instance } => (Command::Amao, Some(instance)),
            Cmd::VmCheck { instance } => (Command::VmCheck, Some(instance)),
            Cmd::Swanson { instance } => (Command::Swanson, Some(instance)),
            Cmd::Decompose { instance } => (Command::Decompose, Some(instance)),
            Cmd::Verify { instance } => (Command::Verify, instance.as_ref()),
        }
    }
}

impl Options {
    /// Instance values overridden by flags.
    pub fn resolve(&self, base: Params) -> CliResult<Params> {
        Ok(Params {
            nmax: self.nmax.unwrap_or(base.nmax),
            mmax: self.mmax.unwrap_or(base.mmax),
            kmax: self.kmax.unwrap_or(base.kmax),
            bmax: self.bmax.unwrap_or(base.bmax),
            seed: self.seed.unwrap_or(base.seed),
            tolerance: match &self.tolerance {
                Some(t) => parse_tolerance(&serde_json::Value::String(t.clone()))
                    .map_err(|e| match e {
                        CliError::Parse(msg) => CliError::Usage(msg),
                        other => other,
                    })?,
                None => base.tolerance,
            },
        })
    }
}

/// Rendered output and the error, if any, that decides the exit code.
pub struct Execution {
    pub output: Option<String>,
    /// Lines for stderr.
    pub messages: Vec<String>,
    pub error: Option<CliError>,
}

impl Execution {
    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, CliError::exit_code)
    }
}

fn failed(error: CliError) -> Execution {
    Execution {
        output: None,
        messages: Vec::new(),
        error: Some(error),
    }
}

pub fn execute(cli: &Cli) -> Execution {
    let (command, path) = cli.command.split();
    let instance: Option<Instance> = match path.map(|p| parse_instance(p)).transpose() {
        Ok(i) => i,
        Err(e) => return failed(e),
    };
    let base = instance.as_ref().map_or_else(Params::default, |i| i.params.clone());
    let params = match cli.options.resolve(base) {
        Ok(p) => p,
        Err(e) => return failed(e),
    };
    let gate = match (&instance, cli.options.require_hypothesis) {
        (Some(inst), true) => inst.ring.require_hypothesis().err().map(CliError::from),
        _ => None,
    };
    // `info` still prints the diagnostics that explain the refusal.
    let gate = match gate {
        Some(e) if command != Command::Info => return failed(e),
        other => other,
    };
    let mut cache = match Cache::open(cli.options.cache.clone()) {
        Ok(c) => c,
        Err(e) => return failed(e),
    };
    let outcome = match commands::run(command, instance.as_ref(), &params, &mut cache) {
        Ok(o) => o,
        Err(e) => return failed(e),
    };
    if let Err(e) = cache.save() {
        return failed(e);
    }
    let format = cli.options.output;
    let messages = if format == Format::Csv {
        outcome.report.notes.clone()
    } else {
        Vec::new()
    };
    let error = gate.or((outcome.failed > 0).then_some(CliError::ChecksFailed(outcome.failed)));
    Execution {
        output: Some(outcome.report.render(format)),
        messages,
        error,
    }
}
