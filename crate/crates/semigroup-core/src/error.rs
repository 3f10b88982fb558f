use thiserror::Error;

/// Errors produced by semigroup construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    /// The member list is not strictly increasing, contains a value that is
    /// not below the conductor, or does not start with 0.
    #[error("invalid member list: {0}")]
    UnsortedOrOutOfRange(String),

    /// Two members have a sum below the conductor that is not itself a member.
    #[error("not closed under addition: {a} + {b} = {sum} is not a member")]
    NotClosedUnderAddition { a: u64, b: u64, sum: u64 },

    /// The value directly below the conductor must be a gap; otherwise the
    /// stated conductor is not the true conductor.
    #[error("conductor predecessor {0} is listed as a member")]
    ConductorPredecessorIsMember(u64),

    /// Inverse enumeration was asked for a value outside the semigroup.
    #[error("{0} is not a member of the semigroup")]
    NotAMember(u64),

    /// A checked 64-bit computation overflowed. Values are never wrapped.
    #[error("arithmetic overflow in checked 64-bit computation")]
    Overflow,
}
