use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] firefly_core::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("cannot parse input: {0}")]
    Parse(String),
}

impl CliError {
    /// Process exit status: 2 for configuration mistakes, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Core(firefly_core::Error::InvalidConfig(_)) => 2,
            CliError::Core(firefly_core::Error::UnknownObjective { .. }) => 2,
            _ => 1,
        }
    }
}
