use crate::arith::{ceil_log, floor_log};
use crate::error::TowerError;
use crate::params::{conductor_formula, genus_formula, level_conductor, TowerParams};

/// Writes t >= 0 uniquely as t = q^{l−1} + j − 1 with l >= 1 and
/// 0 <= j <= q^{l−1}(q−1) − 1, returning (l, j).
///
/// l is recovered as ⌊log_q(t+1)⌋ + 1; the defining identity is asserted
/// after the fact, which pins the convention (an off-by-one in l would
/// break the identity for some t and fail loudly).
pub fn decompose_t(q: u64, t: u64) -> Result<(u32, u64), TowerError> {
    if q < 2 {
        return Err(TowerError::InvalidParameter(format!(
            "base parameter q must be at least 2, got {q}"
        )));
    }
    let t1 = t.checked_add(1).ok_or(TowerError::Overflow)?;
    let l = floor_log(q, t1) + 1;
    let power = q.checked_pow(l - 1).ok_or(TowerError::Overflow)?;
    let j = t1 - power; // q^{l−1} <= t + 1 by choice of l
    assert!(
        j <= power
            .checked_mul(q - 1)
            .map_or(u64::MAX, |cap| cap.saturating_sub(1)),
        "decomposition out of range: t={t} q={q} gave l={l} j={j}"
    );
    Ok((l, j))
}

/// λ_t of level m in closed form.
///
/// For t past q^{⌊m/2⌋} − 1 the members are the consecutive integers from
/// the conductor on. Below that threshold, t lands inside scaled block l
/// of the block decomposition, where (l, j) = decompose_t(q, t) and
/// λ_t = q^{m−2l+1}·(c_{2l−1} + j).
pub fn lambda_closed(p: TowerParams, t: u64) -> Result<u64, TowerError> {
    let threshold = p.pow(p.m() / 2) - 1;
    if t >= threshold {
        return conductor_formula(p)
            .checked_add(t - threshold)
            .ok_or(TowerError::Overflow);
    }
    let (l, j) = decompose_t(p.q(), t)?;
    // t < q^{⌊m/2⌋} − 1 forces l <= ⌊m/2⌋, so both 2l−1 <= m−1 and the
    // scale exponent m−2l+1 >= 1 are in range.
    debug_assert!(l <= p.m() / 2);
    let scale = p.pow(p.m() - (2 * l - 1));
    scale
        .checked_mul(level_conductor(p.q(), 2 * l - 1) + j)
        .ok_or(TowerError::Overflow)
}

/// λ⁻¹(⌊k⌋_Λ) of level m in closed form: the index of the largest member
/// not exceeding k.
///
/// From the conductor on this is k − g_m. Below the conductor, k falls
/// under scaled block l = m + 1 − ⌈log_q(q^m − k)⌉ and the index is
/// q^{l−1} − 1 + ⌊k / q^{m−2l+1}⌋ − c_{2l−1}.
pub fn inverse_floor_closed(p: TowerParams, k: u64) -> Result<u64, TowerError> {
    let conductor = conductor_formula(p);
    if k >= conductor {
        // g <= c <= k, so the subtraction cannot underflow.
        return Ok(k - genus_formula(p));
    }
    let l = p.m() + 1 - ceil_log(p.q(), p.pow(p.m()) - k);
    // k < c_m bounds the ceiling log within (⌊(m+1)/2⌋, m], hence
    // 1 <= l <= ⌊m/2⌋ and both exponents below are in range.
    debug_assert!(1 <= l && l <= p.m() / 2);
    let positioned = p.pow(l - 1) - 1 + k / p.pow(p.m() - (2 * l - 1));
    positioned
        .checked_sub(level_conductor(p.q(), 2 * l - 1))
        .ok_or(TowerError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, m: u32) -> TowerParams {
        TowerParams::new(q, m).unwrap()
    }

    #[test]
    fn decompose_small_values() {
        assert_eq!(decompose_t(2, 0).unwrap(), (1, 0));
        assert_eq!(decompose_t(2, 1).unwrap(), (2, 0));
        assert_eq!(decompose_t(3, 5).unwrap(), (2, 3));
    }

    #[test]
    fn decompose_is_the_unique_valid_pair() {
        for q in 2..=6u64 {
            for t in 0..400u64 {
                let mut found = Vec::new();
                for l in 1..=12u32 {
                    let power = q.pow(l - 1);
                    // j ranges over 0..q^{l−1}(q−1); solve t = power + j − 1.
                    if t + 1 >= power {
                        let j = t + 1 - power;
                        if j < power * (q - 1) {
                            found.push((l, j));
                        }
                    }
                }
                assert_eq!(found.len(), 1, "q={q} t={t}");
                assert_eq!(found[0], decompose_t(q, t).unwrap(), "q={q} t={t}");
            }
        }
    }

    #[test]
    fn lambda_small_values() {
        assert_eq!(lambda_closed(params(2, 4), 0).unwrap(), 0);
        assert_eq!(lambda_closed(params(2, 4), 1).unwrap(), 8);
        assert_eq!(lambda_closed(params(2, 4), 3).unwrap(), 12);
    }

    #[test]
    fn lambda_hits_the_conductor_at_the_threshold_index() {
        for q in 2..=5u64 {
            for m in 1..=6u32 {
                let p = params(q, m);
                assert_eq!(
                    lambda_closed(p, q.pow(m / 2) - 1).unwrap(),
                    conductor_formula(p),
                    "q={q} m={m}"
                );
            }
        }
    }

    #[test]
    fn inverse_floor_small_values() {
        assert_eq!(inverse_floor_closed(params(2, 3), 2).unwrap(), 0);
        assert_eq!(inverse_floor_closed(params(2, 4), 11).unwrap(), 2);
        assert_eq!(inverse_floor_closed(params(2, 4), 20).unwrap(), 11);
    }

    #[test]
    fn inverse_floor_inverts_lambda_on_members() {
        for q in 2..=4u64 {
            for m in 1..=5u32 {
                let p = params(q, m);
                for t in 0..200u64 {
                    let x = lambda_closed(p, t).unwrap();
                    assert_eq!(inverse_floor_closed(p, x).unwrap(), t, "q={q} m={m} t={t}");
                }
            }
        }
    }
}
