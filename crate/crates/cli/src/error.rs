use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown mode `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: mode `{name}` declared twice")]
    DuplicateMode { line: usize, name: String },
    #[error("line {line}: splitter couples mode `{name}` to itself")]
    DuplicateModePair { line: usize, name: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: gaussnet_core::Error,
    },
    #[error("variable `${0}` is not bound")]
    UnboundVariable(String),
    #[error("variable `${0}` does not occur in the netfile")]
    UnknownVariable(String),
    #[error("sweep needs at least one step")]
    NonPositiveSteps,
    #[error(transparent)]
    Core(#[from] gaussnet_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
