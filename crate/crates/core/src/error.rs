use thiserror::Error;

use crate::pairs::PairSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The closed form for connected fiber invariants does not cover the
    /// requested insertion data.
    #[error("fiber formula hypothesis violated: {0}")]
    FormulaHypothesisViolated(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("missing input for {}", format_missing(.0))]
    MissingInput(Vec<PairSet>),

    #[error("degenerate equation: {0}")]
    Degenerate(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("integrity error: {0}")]
    Integrity(String),

    /// An internal identity (triangularity, closed-form agreement) failed.
    #[error("identity check failed: {0}")]
    Identity(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn format_missing(sets: &[PairSet]) -> String {
    sets.iter()
        .map(|s| s.to_json_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
