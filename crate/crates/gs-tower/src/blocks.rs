use semigroup_core::NumericalSemigroup;

use crate::error::TowerError;
use crate::params::{conductor_formula, level_conductor, TowerParams};

/// The i-th block of members below the conductor, before scaling:
/// A_i = {start, start+1, …, start+len−1} with start = c_{2i−1} and
/// len = q^{i−1}(q−1). Within level m the block contributes the members
/// scale·A_i with scale = q^{m−2i+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockA {
    pub index: u32,
    pub start: u64,
    pub len: u64,
    pub scale: u64,
}

/// The i-th block of level p.m(), for 1 <= i <= m/2.
pub fn block_a(p: TowerParams, i: u32) -> Result<BlockA, TowerError> {
    if i < 1 || i > p.m() / 2 {
        return Err(TowerError::InvalidParameter(format!(
            "block index {i} outside 1..={} for level {}",
            p.m() / 2,
            p.m()
        )));
    }
    // 2i - 1 <= m - 1, so every power involved is within the q^m bound
    // established by the parameter check.
    Ok(BlockA {
        index: i,
        start: level_conductor(p.q(), 2 * i - 1),
        len: p.pow(i - 1) * (p.q() - 1),
        scale: p.pow(p.m() - (2 * i - 1)),
    })
}

/// Refuses construction when the conductor exceeds the member budget.
fn check_budget(p: TowerParams, member_budget: u64) -> Result<u64, TowerError> {
    // Sweeping a materialized level touches indices up to ~2c, so demand
    // that 2·q^m is also representable.
    p.q()
        .pow(p.m())
        .checked_mul(2)
        .ok_or(TowerError::Overflow)?;
    let conductor = conductor_formula(p);
    if conductor > member_budget {
        return Err(TowerError::BudgetExceeded {
            conductor,
            budget: member_budget,
        });
    }
    Ok(conductor)
}

/// Materializes level m by the defining recursion
///
/// Λ¹ = N₀,  Λ^m = q·Λ^{m−1} ∪ {k : k >= q^m − q^⌊(m+1)/2⌋},
///
/// carrying the explicit members below each level's conductor upward.
/// This is the reference construction everything else is checked against.
pub fn build_recursive(p: TowerParams, member_budget: u64) -> Result<NumericalSemigroup, TowerError> {
    check_budget(p, member_budget)?;
    let q = p.q();
    let mut below: Vec<u64> = Vec::new(); // level 1: no members below c = 0
    let mut prev_conductor = 0u64;
    for level in 2..=p.m() {
        let conductor = level_conductor(q, level);
        let mut next: Vec<u64> = below.iter().map(|&x| q * x).collect();
        // Scaled tail of the previous level: q·x for x >= c_{m−1} stays
        // below the new conductor only while x < c_m / q (an empty range
        // exactly when c_m = q·c_{m−1}, i.e. at odd levels).
        let mut x = prev_conductor;
        while q * x < conductor {
            next.push(q * x);
            x += 1;
        }
        below = next;
        prev_conductor = conductor;
    }
    Ok(NumericalSemigroup::from_members(&below, conductor_formula(p))?)
}

/// Materializes level m from the closed-form block decomposition
///
/// Λ^m = ⨆_{i=1}^{⌊m/2⌋} q^{m−2i+1}·A_i ⊔ {k : k >= c_m},
///
/// asserting along the way that the scaled blocks really are increasing,
/// pairwise disjoint and below the conductor.
pub fn build_closed(p: TowerParams, member_budget: u64) -> Result<NumericalSemigroup, TowerError> {
    let conductor = check_budget(p, member_budget)?;
    let mut below: Vec<u64> = Vec::new();
    for i in 1..=p.m() / 2 {
        let block = block_a(p, i)?;
        for j in 0..block.len {
            let value = block.scale * (block.start + j);
            if let Some(&prev) = below.last() {
                if value <= prev {
                    return Err(TowerError::DisjointnessViolation(format!(
                        "scaled block {i} produced {value} after {prev}"
                    )));
                }
            }
            below.push(value);
        }
    }
    if let Some(&last) = below.last() {
        if last >= conductor {
            return Err(TowerError::DisjointnessViolation(format!(
                "scaled block value {last} reaches the conductor {conductor}"
            )));
        }
    }
    Ok(NumericalSemigroup::from_members(&below, conductor)?)
}
