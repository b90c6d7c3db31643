mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Uniform(a) => commands::uniform(a),
        Command::Paving(a) => commands::paving(a),
        Command::Check(a) => commands::check(a),
        Command::Scan(a) => commands::scan(a),
        Command::Lemma(a) => commands::lemma(a),
        Command::Interlace(a) => commands::interlace(a),
    };
    match result {
        Ok(finding) => ExitCode::from(finding.exit_code() as u8),
        Err(e) => {
            eprintln!("iklp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
