//! Command-line front end for `hulthen-core`.
//!
//! [`run`] parses arguments, resolves the configuration, runs one
//! subcommand and maps the result onto the exit-code contract: `0`
//! success, `1` numerical failure, `2` usage error.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;

use clap::Parser;

use crate::args::Cli;
use crate::config::RunConfig;
use crate::error::CliResult;

/// Runs the tool with `argv` (program name first) and the value of
/// `HULTHEN_ATOMIC_UNITS`, returning the exit code.
pub fn run<I, T>(argv: I, atomic_units_env: Option<&str>) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version exit 0, every parse error is a usage error
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, atomic_units_env) {
        Ok(None) => 0,
        Ok(Some(failure)) => {
            eprintln!("hulthen: {failure}");
            1
        }
        Err(e) => {
            eprintln!("hulthen: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, atomic_units_env: Option<&str>) -> CliResult<Option<String>> {
    let cfg = RunConfig::resolve(&cli.common, atomic_units_env)?;
    let outcome = commands::run_command(&cli.command, &cfg)?;
    let text = outcome.document.render(cfg.format.unwrap_or(outcome.default_format));
    output::emit(&text, cfg.out.as_deref())?;
    Ok(outcome.failure)
}
