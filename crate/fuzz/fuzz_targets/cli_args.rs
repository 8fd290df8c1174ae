//! Whole-command-line parsing: any whitespace-split argument vector must
//! produce a parse result without panicking. Commands are never executed.

#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let args = std::iter::once("relbell").chain(text.split_whitespace());
        let _ = relbell_cli::config::Cli::try_parse_from(args);
    }
});
