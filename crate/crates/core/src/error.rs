use thiserror::Error;

/// Errors raised by the toolkit.
///
/// The CLI maps these onto exit codes with [`Error::exit_code`]: a negative
/// mathematical verdict is `1`, bad input is `2`, numerical breakdown is `3`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point outside the open domain: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Shape(String),

    #[error("disc leaves the ball: boundary sup {sup:.12} exceeds 1 + {tolerance:e}")]
    RangeViolation { sup: f64, tolerance: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("interpolation problem is infeasible (min eigenvalue {min_eigenvalue:e})")]
    Infeasible { min_eigenvalue: f64 },

    #[error("ill-conditioned problem: {0}")]
    Conditioning(String),

    #[error("matrix is not Hermitian: max asymmetry {0:e}")]
    NotHermitian(f64),

    #[error("integrand is not finite at node {node}")]
    Integration { node: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ratio undefined: {0}")]
    UndefinedRatio(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Infeasible { .. } => 1,
            Error::Conditioning(_) | Error::Integration { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
