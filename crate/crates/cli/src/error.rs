use std::io;
use std::path::PathBuf;

/// Error kinds surfaced by the command line. The `Display` prefix of each
/// variant is stable so scripts can match on it.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] gnbg_core::Error),
    #[error("io error: {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("parse error: {}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("validation error: {}: {source}", path.display())]
    Invalid { path: PathBuf, source: gnbg_core::Error },
    #[error("argument error: {0}")]
    Argument(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io { path: path.into(), source }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Self::Parse { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
