use thiserror::Error;

/// Errors raised by the offset pipeline and its building blocks.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("unsupported operation: {0}")]
    Unsupported(&'static str),
    #[error("subresultant index {index} out of range for degrees ({n}, {m})")]
    IndexOutOfRange { index: usize, n: usize, m: usize },
    #[error("determinant polynomial needs rows <= columns, got {rows} x {cols}")]
    Shape { rows: usize, cols: usize },
    #[error("declared degree {declared} is below the actual degree {actual}")]
    DegreeMismatch { declared: usize, actual: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("distance must be positive")]
    NonPositiveDistance,
    #[error("singular Moebius map: a*e - b*c = 0")]
    SingularMobius,
    #[error("offset is reducible: U^2 + V^2 is a perfect square")]
    ReducibleOffset,
    #[error("first subresultant vanishes identically; the parametrization is probably not proper")]
    VanishingSubresultant,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parameter {0} is a pole of the parametrization")]
    Pole(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resultant size cap exceeded: deg P + deg Q = {0} > {1}")]
    CapExceeded(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty plotting window")]
    EmptyWindow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
