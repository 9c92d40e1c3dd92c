use std::process::ExitCode;

use hulthen_cli::config::ATOMIC_UNITS_ENV;

fn main() -> ExitCode {
    let env = std::env::var(ATOMIC_UNITS_ENV).ok();
    ExitCode::from(hulthen_cli::run(std::env::args_os(), env.as_deref()))
}
