use thiserror::Error;

/// Errors raised by the exact pipeline.
///
/// The two variants the command line maps to dedicated exit codes are
/// [`Error::InputNotAlgebraic`] and [`Error::TheoremViolation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("basis matrices are linearly dependent")]
    DependentBasis,

    #[error("basis is not closed under the bracket: [x_{i}, x_{j}] leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not unipotent")]
    NotUnipotent,

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("input is not the Lie algebra of an algebraic group: {check}")]
    InputNotAlgebraic { check: String },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("toral action is not split over the rationals: {0}")]
    NotSplit(String),

    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

impl Error {
    pub(crate) fn not_algebraic(check: impl Into<String>) -> Self {
        Error::InputNotAlgebraic { check: check.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
