use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uncertainty violation: a^2 - |b|^2 = {det} < 1/4 (a = {a}, |b| = {b_mag})")]
    UncertaintyViolation { a: f64, b_mag: f64, det: f64 },

    #[error("diagonal covariance entry must be positive, got a = {0}")]
    NonPositive(f64),

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown mode label `{0}`")]
    UnknownLabel(String),

    #[error("mode label `{0}` appears more than once")]
    DuplicateLabel(String),

    #[error("keep set for partial trace is empty")]
    EmptyKeepSet,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid beam splitter: {0}")]
    InvalidSplitter(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}
