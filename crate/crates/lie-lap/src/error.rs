use std::io;

use lie_lap_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Domain = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed JSON in {what}: {source}")]
    Json { what: String, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Json { .. } => ExitCode::Usage,
            CliError::Core(CoreError::Invalid(_)) => ExitCode::Usage,
            CliError::Core(CoreError::Domain(_)) => ExitCode::Domain,
            CliError::Core(CoreError::Inconsistent(_) | CoreError::Exhausted(_)) => ExitCode::CheckFailed,
            CliError::Csv(_) | CliError::Write(_) => ExitCode::Usage,
        }
    }
}
