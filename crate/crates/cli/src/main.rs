use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use epslab_cli::{execute, Cli};

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("EPSLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("EPSLAB_THREADS must be a positive integer, got '{value}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("epslab: {msg}");
        return ExitCode::from(1);
    }
    let run = execute(&cli);
    if let Some(text) = &run.output {
        let written = match &cli.options.out {
            Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
            None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
        };
        if let Err(msg) = written {
            eprintln!("epslab: cannot write output: {msg}");
            return ExitCode::from(2);
        }
    }
    for line in &run.messages {
        eprintln!("{line}");
    }
    if let Some(err) = &run.error {
        eprintln!("epslab: {err}");
    }
    ExitCode::from(run.exit_code() as u8)
}
