use alloc::string::String;

/// Errors raised by the objective, the instance builders, and the harness.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A non-finite value reached a function that is only defined on finite input.
    #[error("domain error: non-finite value {value} at index {index}")]
    Domain { index: usize, value: f64 },
    /// Lengths or matrix shapes disagree.
    #[error("shape error: {0}")]
    Shape(String),
    /// An argument is outside its documented range.
    #[error("argument error: {0}")]
    Argument(String),
    /// A constructed or loaded value breaks a type invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// An optimizer proposed a candidate containing NaN or infinity.
    #[error("optimizer error: candidate {candidate} has non-finite coordinate {index}")]
    NonFiniteCandidate { candidate: usize, index: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
