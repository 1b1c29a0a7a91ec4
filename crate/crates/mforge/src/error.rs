use thiserror::Error;

/// Errors produced by construction, quadrature and simulation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("quadrature did not converge for `{component}`: {detail}")]
    QuadratureNonConvergence { component: String, detail: String },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("not spectrally positive: measure charges the negative half-line ({0})")]
    NotSpectrallyPositive(String),

    #[error("first moment infinite: {0}")]
    HeavyTail(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("divergent transform for entry ({i},{j}): {detail}")]
    DivergentTransform { i: usize, j: usize, detail: String },

    #[error("inconsistent path grids: {0}")]
    GridMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("config error in field `{field}`: {detail}")]
    Config { field: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
