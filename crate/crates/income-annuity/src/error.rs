//! Crate-wide error type and result alias.

use thiserror::Error;

/// Errors surfaced by the pricing engine and its front ends.
///
/// The CLI maps these onto process exit codes: input errors exit 1,
/// non-viable products exit 2, numerical failures exit 3.
#[derive(Debug, Error)]
pub enum AnnuityError {
    /// A parameter or input file violated a documented precondition.
    #[error("invalid input: {message}")]
    InvalidInput { message: String },

    /// The requested product has no viable price at the given parameters.
    #[error("product not viable: {reason}")]
    NonViable { reason: String },

    /// A numerical routine failed to converge within its budget.
    #[error("numerical failure: {message}")]
    Numerical { message: String },

    /// Rate sensitivity is unbounded at this point (the defining equation's
    /// crossing is tangent); the duration carries no finite value.
    #[error("life annuity duration blows up near the viability frontier (age {age}, rate {rate})")]
    DurationBlowUp { age: f64, rate: f64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl AnnuityError {
    pub fn invalid(message: impl Into<String>) -> Self {
        AnnuityError::InvalidInput {
            message: message.into(),
        }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        AnnuityError::Numerical {
            message: message.into(),
        }
    }

    pub fn non_viable(reason: impl Into<String>) -> Self {
        AnnuityError::NonViable {
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, AnnuityError>;
