//! `superbbw`: query root data, Euler characters and cohomology verdicts for
//! line bundles on `GL(m|n)/B`, scan weight boxes, and run the self-test.

mod args;
mod commands;
mod scan;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// A failure with the exit code it maps to.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<superbbw::Error> for Failure {
    fn from(e: superbbw::Error) -> Self {
        if e.is_invariant() {
            Failure::internal(format!("internal check failed: {e}"))
        } else {
            Failure::usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::internal(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::internal(format!("json error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Roots(a) => commands::roots(&a, &mut out),
        Command::Chi(a) => commands::chi(&a, &mut out),
        Command::Verdict(a) => commands::verdict(&a, &mut out),
        Command::Scan(a) => scan::run(&a, &mut out),
        Command::Selftest(a) => commands::selftest(&a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("superbbw: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
