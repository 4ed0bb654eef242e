use thiserror::Error;

/// Errors raised by the algebra, law and presentation layers.
///
/// Each variant names the precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different series spaces, rings or generator sets.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// Substitution into a series is not defined for these arguments.
    #[error("composition error: {0}")]
    Composition(String),

    #[error("reversion error: {0}")]
    Reversion(String),

    #[error("reciprocal error: {0}")]
    Reciprocal(String),

    /// An element or assignment has the wrong degree or is not homogeneous.
    #[error("grading error: {0}")]
    Grading(String),

    #[error("twisting error: {0}")]
    Twisting(String),

    /// The requested normal-form strategy does not apply to the presentation.
    #[error("strategy error: {0}")]
    Strategy(String),

    #[error("truncation error: {0}")]
    Truncation(String),

    #[error("argument error: {0}")]
    Argument(String),

    /// Input is not symmetric; `witness` names an offending transposition.
    #[error("symmetry error: not invariant under {witness}")]
    Symmetry { witness: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
