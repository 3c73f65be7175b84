//! File formats and command line for `ztorsion`.
//!
//! Structures and morphisms are JSON files that name elements by label. Every
//! command prints a single JSON document with sorted keys, so the same input
//! always produces the same bytes.

pub mod commands;
pub mod format;
pub mod output;

use clap::Parser;
use serde_json::json;

pub use commands::{Cli, Command};

/// What a run printed and the code it exits with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes: 0 success, 1 a domain failure, 2 a usage error.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok(value) => Outcome { code: 0, stdout: format::canonical(&value), stderr: String::new() },
        Err(commands::Failure(msg)) => {
            Outcome { code: 1, stdout: format::canonical(&json!({ "error": msg })), stderr: format!("error: {msg}\n") }
        }
    }
}
