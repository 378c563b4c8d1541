use thiserror::Error;

use crate::hopf::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    Field(String),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Input did not match the structure-constant schema. `path` is a
    /// JSON-pointer-like location such as `$.mult[0][1]`.
    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("Hopf algebra axioms violated ({} failure(s))", .0.failures.len())]
    Axioms(ValidationReport),

    #[error("operators do not commute (generators {0} and {1})")]
    NotCommuting(usize, usize),

    #[error("{what} has dimension {found}, expected 1 (input is not a Hopf algebra)")]
    IntegralDimension { what: &'static str, found: usize },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    /// A construction produced data that fails its own defining identities.
    #[error("construction fault: {0}")]
    Construction(String),

    /// A sign or side convention produced a result that failed re-verification.
    #[error("convention fault: {0}")]
    Convention(String),

    /// The direct ribbon enumeration and the square-root pairs disagree.
    #[error("classification bijection failed: {0}")]
    Bijection(String),

    #[error("invalid catalog parameters: {0}")]
    Catalog(String),

    #[error("dimension {dim} exceeds the configured ceiling {ceiling}")]
    Ceiling { dim: usize, ceiling: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
