//! File formats and subcommands behind the `smfrft` binary.

pub mod args;
pub mod commands;
pub mod csvio;
pub mod error;

pub use commands::{run, Outcome};
pub use error::CliError;

/// Process exit status for a finished command.
pub fn exit_code(result: &Result<Outcome, CliError>) -> u8 {
    match result {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::VerifyFailed) => 1,
        Err(_) => 2,
    }
}
