/// One row of a bound table: the row index `i`, the enumerated member
/// `lambda` = λ_i, the ν-sequence value `nu` = ν_i, and the order bound
/// `delta` = δ_i = min{ν_j : j > i}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRow {
    pub index: u64,
    pub lambda: u64,
    pub nu: u64,
    pub delta: u64,
}

/// Prefix of the (i, λ_i, ν_i, δ_i) table of a numerical semigroup.
///
/// The λ column is strictly increasing, and the δ column is non-decreasing
/// (each δ_i is a minimum over a tail set that shrinks as i grows).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}
