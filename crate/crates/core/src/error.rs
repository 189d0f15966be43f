//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A grid does not have the required shape.
    #[error("shape error: {0}")]
    Shape(String),
    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// An object violates its structural invariants.
    #[error("validation error: {0}")]
    Validation(String),
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds the supported size range.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// A denominator vanishes or a chain has no unique stationary state.
    #[error("degeneracy error: {0}")]
    Degeneracy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
