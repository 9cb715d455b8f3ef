use thiserror::Error;

/// Errors raised by the optimizer, the problem catalog and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("degenerate direction: auxiliary point coincides with base point")]
    DegenerateDirection,

    #[error("degenerate move: no usable direction after {attempts} resamples")]
    DegenerateMove { attempts: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("spot has not been evaluated")]
    Unevaluated,

    #[error("visible list is empty")]
    EmptyList,

    #[error("objective `{problem}` returned a non-finite value at {x:?}")]
    NonFiniteObjective { problem: String, x: Vec<f64> },

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("problem `{problem}` does not accept dimension {dim}")]
    InvalidDimension { problem: String, dim: usize },

    #[error("unknown sweep parameter `{0}`")]
    UnknownParameter(String),

    #[error("ragged score matrix: row {row} has {got} columns, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("{failed} of {total} runs failed; first failure: {first}")]
    ExperimentFailed {
        failed: usize,
        total: usize,
        first: String,
    },

    #[error("trace is empty")]
    EmptyTrace,

    #[error("I/O error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error at {path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    pub(crate) fn csv(path: impl AsRef<std::path::Path>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
