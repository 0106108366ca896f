//! IO, parallel execution and the command-line front end for `lie-lap-core`.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;
pub mod parallel;
pub mod verify;

pub use error::{CliError, ExitCode};
pub use lie_lap_core as core;
