//! Text formats, DOT export and the command-line front end for `freewords`.

pub mod app;
pub mod dot;
pub mod equations;
pub mod format;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    BadInput(String),
    #[error("{0}")]
    Core(#[from] freewords::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 2 for malformed input, 1 for everything else.
    pub fn status(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::BadInput(_) => 2,
            CliError::Core(_) | CliError::Io { .. } => 1,
        }
    }
}

pub use app::{run, Outcome};
