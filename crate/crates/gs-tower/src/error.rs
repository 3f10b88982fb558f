use semigroup_core::SemigroupError;
use thiserror::Error;

/// Errors produced by tower parameter validation, construction and the
/// closed-form evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    /// The parameters violate q >= 2 or m >= 1.
    #[error("invalid tower parameters: {0}")]
    InvalidParameter(String),

    /// A checked 64-bit computation overflowed (q^m or a derived value is
    /// not representable). Values are never wrapped.
    #[error("arithmetic overflow in checked 64-bit computation")]
    Overflow,

    /// Materializing the semigroup would exceed the configured budget.
    #[error("conductor {conductor} exceeds the member budget {budget}")]
    BudgetExceeded { conductor: u64, budget: u64 },

    /// Internal consistency failure of the block construction: the scaled
    /// blocks must tile the members below the conductor without overlap.
    /// This variant must never fire; it exists so a latent bug surfaces as
    /// a hard error rather than a silently wrong semigroup.
    #[error("scaled blocks are not disjoint and increasing: {0}")]
    DisjointnessViolation(String),

    /// A validation error bubbled up from the generic semigroup layer.
    #[error(transparent)]
    Semigroup(SemigroupError),
}

impl From<SemigroupError> for TowerError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::Overflow => TowerError::Overflow,
            other => TowerError::Semigroup(other),
        }
    }
}
