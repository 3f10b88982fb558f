//! Exact arithmetic on numerical semigroups.
//!
//! A numerical semigroup is a subset of the non-negative integers that
//! contains 0, is closed under addition, and misses only finitely many
//! values (its *gaps*). This crate stores such a semigroup explicitly — the
//! members below the conductor plus the analytic tail — and computes the
//! classical derived data straight from the definitions: the enumeration λ
//! and its inverse, the semigroup floor ⌊·⌋_Λ, the ν-sequence, and the
//! Feng–Rao order bound δ on the minimum distance.
//!
//! The crate deliberately favors definitional transparency over cleverness:
//! it is the reference layer that the closed-form formulas in `gs-tower`
//! are verified against. The one optimization, [`NumericalSemigroup::nu`],
//! is an equivalent reorganization of the defining count and is itself
//! cross-checked against the direct scan throughout the test suites.
//!
//! All arithmetic is checked 64-bit: overflow is reported as an error,
//! never wrapped.

mod error;
mod semigroup;
mod table;

pub use error::SemigroupError;
pub use semigroup::NumericalSemigroup;
pub use table::{BoundRow, BoundTable};
