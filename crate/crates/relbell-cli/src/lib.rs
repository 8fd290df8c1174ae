//! Command-line front end for the relativistic Bell-correlation library.
//!
//! The binary exposes four subcommands: `verify` (self-check suite),
//! `correlator` (single-configuration correlators and CHSH value),
//! `chsh-scan` (optimized CHSH maximum over a grid of boost speeds), and
//! `compare` (the two observables side by side along a boost sweep).
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 for
//! usage or runtime errors (reported as a single diagnostic line on stderr).

pub mod commands;
pub mod config;
pub mod output;

use clap::error::ErrorKind;
use clap::Parser;

/// Parse the process arguments, dispatch, and return the process exit code.
pub fn run() -> i32 {
    let cli = match config::Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            return match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = error.print();
                    0
                }
                _ => {
                    let text = error.to_string();
                    let first_line = text.lines().next().unwrap_or("invalid arguments");
                    eprintln!("{first_line}");
                    2
                }
            };
        }
    };

    let outcome = match &cli.command {
        config::Command::Verify(args) => commands::run_verify(args),
        config::Command::Correlator(args) => commands::run_correlator(args),
        config::Command::ChshScan(args) => commands::run_chsh_scan(args),
        config::Command::Compare(args) => commands::run_compare(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}
