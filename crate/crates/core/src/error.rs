use thiserror::Error;

use crate::arith::MatrixError;
use crate::model::ModelError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{what} is not a positive integer: {value}")]
    NonIntegerResult { what: &'static str, value: String },
    #[error("{what} is not positive: {value}")]
    NonPositiveResult { what: &'static str, value: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{what} = {actual} exceeds the brute-force limit {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a Laplacian matrix: {0}")]
    MalformedLaplacian(String),
}
