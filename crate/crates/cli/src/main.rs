mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::CliError;

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SLICE_SIEVE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("SLICE_SIEVE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn run(cli: &Cli) -> Result<String, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Analyze(a) => commands::analyze(a, cli.format, &cli.det_strategy),
        Command::Tables(a) => commands::tables(a, cli.format),
        Command::Alexander(a) => commands::alexander(a, cli.format),
        Command::Homology(a) => commands::homology(a, cli.format),
        Command::Selftest(a) => commands::selftest(a, cli.format, &cli.det_strategy),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let result = run(&cli).and_then(|body| emit(&cli, &body));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let CliError::Failed { body, .. } = &e {
                if let Err(write_err) = emit(&cli, body) {
                    eprintln!("error: {write_err}");
                }
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
