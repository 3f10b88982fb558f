//! Integer-only logarithm helpers.
//!
//! Branch selection in the closed forms hinges on whether a value is an
//! exact power of q, which floating-point logs get wrong at the
//! boundaries; everything here works by repeated checked multiplication.

/// Largest e with q^e <= x. Requires q >= 2 and x >= 1.
pub(crate) fn floor_log(q: u64, x: u64) -> u32 {
    debug_assert!(q >= 2 && x >= 1);
    let mut e = 0;
    let mut acc = 1u64;
    while let Some(next) = acc.checked_mul(q) {
        if next > x {
            break;
        }
        acc = next;
        e += 1;
    }
    // On checked_mul overflow the next power exceeds u64::MAX >= x,
    // so the current e is already the answer.
    e
}

/// Smallest e with q^e >= x. Requires q >= 2 and x >= 1.
pub(crate) fn ceil_log(q: u64, x: u64) -> u32 {
    debug_assert!(q >= 2 && x >= 1);
    let mut e = 0;
    let mut acc = 1u64;
    while acc < x {
        e += 1;
        match acc.checked_mul(q) {
            Some(next) => acc = next,
            // The power just crossed u64::MAX >= x, so e is enough.
            None => break,
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_log_handles_exact_powers_and_neighbors() {
        for q in 2u64..=9 {
            let mut power = 1u64;
            for e in 0u32..10 {
                assert_eq!(floor_log(q, power), e);
                assert_eq!(floor_log(q, power + 1), if power + 1 == q { 1 } else { e });
                if power > 1 {
                    assert_eq!(floor_log(q, power - 1), e - 1);
                }
                power *= q;
            }
        }
    }

    #[test]
    fn ceil_log_handles_exact_powers_and_neighbors() {
        for q in 2u64..=9 {
            let mut power = 1u64;
            for e in 0u32..10 {
                assert_eq!(ceil_log(q, power), e);
                assert_eq!(ceil_log(q, power + 1), e + 1);
                // power - 1 = 1 only for q = 2, e = 1, where the answer is 0.
                if power > 2 {
                    assert_eq!(ceil_log(q, power - 1), e);
                }
                power *= q;
            }
        }
    }

    #[test]
    fn logs_survive_the_top_of_the_integer_range() {
        assert_eq!(floor_log(2, u64::MAX), 63);
        assert_eq!(ceil_log(2, u64::MAX), 64);
        assert_eq!(floor_log(10, u64::MAX), 19);
        assert_eq!(ceil_log(10, u64::MAX), 20);
    }
}
