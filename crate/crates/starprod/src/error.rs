use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter for family `{family}`: {reason}")]
    InvalidFamilyParameter { family: String, reason: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("graph is not regular: {0}")]
    NotRegular(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("zero polynomial has no root decomposition")]
    ZeroPolynomial,

    #[error("polynomial has non-integer coefficients")]
    NonIntegerCoefficients,

    #[error("division by zero polynomial")]
    ZeroDenominator,

    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),

    #[error("Jacobi iteration did not converge within the sweep limit")]
    JacobiNoConvergence,

    #[error("independent computation routes disagree: {0}")]
    RouteDisagreement(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
