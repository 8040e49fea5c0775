use thiserror::Error;

/// Errors raised by the TFN library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TfnError {
    /// A value violates a type invariant (ordering, finiteness, weight sum).
    #[error("validation error: {0}")]
    Validation(String),

    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An arithmetic result left the finite range of `f64`.
    #[error("overflow error: {0} produced a non-finite component")]
    Overflow(&'static str),

    #[error("division by zero: divisor is the crisp number 0")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: vectors need at least one component")]
    EmptyVector,
}

pub type Result<T> = std::result::Result<T, TfnError>;
