use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A ballot is not a permutation of the candidate set.
    #[error("invalid ballot: {0}")]
    InvalidBallot(String),

    /// Sizes of two related values disagree (score vector vs. candidates,
    /// witness length vs. coalition size, ...).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A net-advantage matrix violates a structural requirement.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Off-diagonal entries do not share a parity; no election realizes it.
    #[error("mixed parity: off-diagonal net advantages are not all even or all odd")]
    MixedParity,

    /// A problem instance fails validation.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An exhaustive search exceeded its budget.
    #[error("search budget exceeded")]
    BudgetExceeded,

    /// A reduction builder could not realize its targets.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A builder postcondition did not hold on the finished artifact.
    #[error("postcondition violated: {0}")]
    Postcondition(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
