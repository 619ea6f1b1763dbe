//! `homquiver` command-line frontend.

mod args;
mod commands;
#[cfg(test)]
mod statements;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use homquiver::Error;

use crate::args::Cli;
use crate::commands::{run, Body};

const EXIT_INVALID: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_CAP: u8 = 4;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::DimensionCapExceeded { .. }) => EXIT_CAP,
        Some(Error::PresentationMismatch(_)) => EXIT_DISAGREE,
        Some(Error::NotAComplex { .. } | Error::InconsistentRankData(_)) => 1,
        Some(_) => EXIT_INVALID,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match report.body {
                Body::Json(v) => format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON serializes")),
                Body::Text(t) => t,
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            if report.agree {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: engines disagree or a check failed");
                ExitCode::from(EXIT_DISAGREE)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
