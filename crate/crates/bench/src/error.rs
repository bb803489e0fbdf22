use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] rth_quasi::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },
}

impl BenchError {
    /// Process exit code: 2 for bad configuration or input data, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Config(_) | BenchError::Core(_) | BenchError::Input { .. } => 2,
            BenchError::Csv { source, .. } if !source.is_io_error() => 2,
            BenchError::Io { .. } | BenchError::Csv { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, BenchError>;
