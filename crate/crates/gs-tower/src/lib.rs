//! Closed forms for the numerical semigroups of the second
//! Garcia–Stichtenoth tower.
//!
//! For a base q >= 2 the tower's semigroups are defined recursively by
//!
//! ```text
//! Λ¹ = N₀,    Λ^m = q·Λ^{m−1} ∪ { k : k >= q^m − q^⌊(m+1)/2⌋ },
//! ```
//!
//! and this crate provides both that defining construction
//! ([`build_recursive`], the reference everything else is judged against)
//! and the closed forms that avoid materializing anything: the conductor
//! and genus ([`conductor_formula`], [`genus_formula`]), the block
//! decomposition of the members below the conductor ([`block_a`],
//! [`build_closed`]), the enumeration λ and the index of the semigroup
//! floor ([`lambda_closed`], [`inverse_floor_closed`]), the ν-sequence
//! ([`nu_closed`]), and the Feng–Rao order bound δ on the minimum distance
//! ([`order_bound_via_nu`], [`order_bound_closed`]).
//!
//! The formulas are purely arithmetic in q and hold for any integer
//! q >= 2, not only prime powers — the test suites exercise q = 6 on
//! purpose. The coding-theoretic reading (Weierstrass semigroups of
//! one-point codes on the tower over the field with q² elements) of course
//! requires q to be a prime power.
//!
//! All arithmetic is checked 64-bit: overflow is reported, never wrapped,
//! and constructions refuse parameters whose conductor exceeds a caller
//! supplied member budget.

mod arith;
mod blocks;
mod bound;
mod enumeration;
mod error;
mod params;

pub use blocks::{block_a, build_closed, build_recursive, BlockA};
pub use bound::{nu_closed, order_bound_closed, order_bound_via_nu};
pub use enumeration::{decompose_t, inverse_floor_closed, lambda_closed};
pub use error::TowerError;
pub use params::{conductor_formula, genus_formula, TowerParams, DEFAULT_MEMBER_BUDGET};
