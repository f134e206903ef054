use std::process::ExitCode;

use clap::Parser;
use zetabound_cli::{exit_code_for, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(exit_code_for(&err) as u8);
        }
    };
    let text = outcome
        .record
        .render(cli.format.unwrap_or(outcome.default_format));
    match &cli.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
