use thiserror::Error;

use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid bandwidth: need odd k >= 3 and n >= k + 1, got n = {n}, k = {k}")]
    InvalidBandwidth { n: usize, k: usize },

    #[error("diagonal {offset} has {found} entries, expected {expected}")]
    LengthMismatch { offset: isize, expected: usize, found: usize },

    #[error("index ({i}, {j}) outside a {n}x{n} matrix (indices are 1-based)")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("nonzero entry at ({i}, {j}) lies outside the periodic band pattern")]
    PatternViolation { i: usize, j: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero {what} at row {row} in float mode; rerun with --mode exact")]
    ZeroPivotNeedsExact { row: usize, what: &'static str },

    #[error("Singular Matrix")]
    SingularMatrix,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SingularMatrix => 2,
            Error::ZeroPivotNeedsExact { .. } => 4,
            Error::InternalInconsistency(_) | Error::Scalar(ScalarError::DivisionByZero | ScalarError::PoleAtZero) => 5,
            _ => 3,
        }
    }

    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format { line, message: message.into() }
    }
}
