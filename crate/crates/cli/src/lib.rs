//! Batch front end for hochlift: problem files in, deterministic reports out.

pub mod commands;
pub mod problem;
pub mod report;

pub use commands::{run, Command};
pub use problem::{InputError, ProblemFile};
pub use report::{Entry, Report};

use thiserror::Error;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot compute: {0}")]
    Compute(String),
    #[error("{path}: {error}")]
    InFile { path: String, error: InputError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Reads and parses a problem file; diagnostics carry the path.
pub fn load(path: &std::path::Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    ProblemFile::parse(&text).map_err(|error| CliError::InFile { path: path.display().to_string(), error })
}
