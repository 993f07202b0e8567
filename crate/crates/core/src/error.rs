use thiserror::Error;

use crate::qring::QLaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A quotient that was required to be a Laurent polynomial was not.
    /// The payload is the remainder of the failed division.
    #[error("non-polynomial result (remainder {remainder})")]
    NonPolynomial { remainder: QLaurentPoly },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
