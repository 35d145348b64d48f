use thiserror::Error;

/// Errors raised by the algebra routines, parsers and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("malformed {kind} literal {text:?}: {reason}")]
    Parse {
        kind: &'static str,
        text: String,
        reason: String,
    },

    #[error("unknown basis tag {0:?}")]
    UnknownBasis(String),

    #[error("size {n} exceeds the configured bound {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("label {0} is not an element of the poset")]
    NotInPoset(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0}")]
    NotInInterval(String),

    #[error("no supremum of {0} in the requested interval")]
    NoSupremum(String),

    #[error("pair is not admissible: composition {monomial} is not finer than {perm}")]
    InadmissiblePair { monomial: String, perm: String },

    #[error("generator {i} out of range for alphabet size {n}")]
    GeneratorOutOfRange { i: usize, n: usize },

    #[error("alphabet of {letters} letters is too small (need {needed})")]
    AlphabetTooSmall { letters: usize, needed: usize },

    #[error("tensor arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("basis {0} has no expansion route for this operation")]
    UnsupportedBasis(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(kind: &'static str, text: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}
