use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("cities {r} and {s} are distinct but at rounded distance 0")]
    ZeroDistance { r: usize, s: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("candidate set is empty")]
    EmptyCandidates,

    #[error("sample too small for a t-test: need at least 2 values, got {0}")]
    UndersizedSample(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
