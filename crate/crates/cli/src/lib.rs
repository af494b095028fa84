//! Front end for the `cayaut` binary: argument parsing, one report per run.

pub mod args;
pub mod commands;
pub mod report;

pub use args::Cli;
pub use commands::{run, Output};
pub use report::{Claim, Report, Status};
