use std::path::PathBuf;

use hulthen_core::HulthenError;
use thiserror::Error;

/// Failures of a CLI run, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    /// `2` for usage errors, `1` for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Numerical(_) => 1,
        }
    }
}

impl From<HulthenError> for CliError {
    fn from(e: HulthenError) -> Self {
        match e {
            HulthenError::InvalidParameter { .. } | HulthenError::InvalidLabel { .. } => CliError::Usage(e.to_string()),
            other => CliError::Numerical(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
