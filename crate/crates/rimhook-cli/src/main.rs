mod commands;
mod output;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Cli;

/// Exit codes: 0 all checks pass, 2 a statistical or exact check exceeded
/// its tolerance, 3 an enumeration guard refused the request.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                rimhook::Error::GuardExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
