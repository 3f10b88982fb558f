use crate::error::TowerError;

/// Default cap on the conductor of a semigroup that may be materialized:
/// construction refuses anything larger instead of degrading. 2²⁶ keeps a
/// full verification sweep (which walks indices up to roughly twice the
/// conductor) in memory and in reasonable time.
pub const DEFAULT_MEMBER_BUDGET: u64 = 1 << 26;

/// Parameters of one level of the tower: the base q >= 2 of the underlying
/// field with q² elements, and the level m >= 1. Level 1 is the full
/// semigroup N₀.
///
/// Construction guarantees q^m is representable in 64 bits, so the
/// conductor and genus formulas below cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TowerParams {
    q: u64,
    m: u32,
}

impl TowerParams {
    pub fn new(q: u64, m: u32) -> Result<Self, TowerError> {
        if q < 2 {
            return Err(TowerError::InvalidParameter(format!(
                "base parameter q must be at least 2, got {q}"
            )));
        }
        if m < 1 {
            return Err(TowerError::InvalidParameter(
                "tower level m must be at least 1".into(),
            ));
        }
        q.checked_pow(m).ok_or(TowerError::Overflow)?;
        Ok(Self { q, m })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The same tower one level down; only valid for m >= 2.
    pub(crate) fn predecessor(&self) -> Self {
        debug_assert!(self.m >= 2);
        Self {
            q: self.q,
            m: self.m - 1,
        }
    }

    /// q^e, guaranteed in range for e <= m by the constructor check.
    pub(crate) fn pow(&self, e: u32) -> u64 {
        debug_assert!(e <= self.m);
        self.q.pow(e)
    }
}

/// Conductor of level `level` of the tower with base q:
/// c = q^level − q^⌊(level+1)/2⌋. Requires q^level representable.
pub(crate) fn level_conductor(q: u64, level: u32) -> u64 {
    q.pow(level) - q.pow(level.div_ceil(2))
}

/// The conductor c_m = q^m − q^⌊(m+1)/2⌋ of level m.
pub fn conductor_formula(p: TowerParams) -> u64 {
    level_conductor(p.q, p.m)
}

/// The genus (gap count) g_m = (q^⌊(m+1)/2⌋ − 1)(q^⌈(m−1)/2⌉ − 1) of
/// level m. The product is at most the conductor, hence representable.
pub fn genus_formula(p: TowerParams) -> u64 {
    // ⌊(m+1)/2⌋ = ⌈m/2⌉ and the exponents sum to m, so the product stays
    // below q^m and cannot overflow.
    let a = p.pow(p.m.div_ceil(2)) - 1;
    let b = p.pow((p.m - 1).div_ceil(2)) - 1;
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_are_validated() {
        assert!(TowerParams::new(2, 1).is_ok());
        assert!(TowerParams::new(9, 6).is_ok());
        assert!(matches!(
            TowerParams::new(1, 3),
            Err(TowerError::InvalidParameter(_))
        ));
        assert!(matches!(
            TowerParams::new(0, 3),
            Err(TowerError::InvalidParameter(_))
        ));
        assert!(matches!(
            TowerParams::new(2, 0),
            Err(TowerError::InvalidParameter(_))
        ));
        // 2^99 is not representable in 64 bits.
        assert_eq!(TowerParams::new(2, 99), Err(TowerError::Overflow));
    }

    #[test]
    fn conductor_formula_small_levels() {
        assert_eq!(conductor_formula(TowerParams::new(2, 1).unwrap()), 0);
        assert_eq!(conductor_formula(TowerParams::new(2, 3).unwrap()), 4);
        assert_eq!(conductor_formula(TowerParams::new(2, 4).unwrap()), 12);
    }

    #[test]
    fn genus_formula_small_levels() {
        assert_eq!(genus_formula(TowerParams::new(2, 1).unwrap()), 0);
        assert_eq!(genus_formula(TowerParams::new(2, 4).unwrap()), 9);
        assert_eq!(genus_formula(TowerParams::new(3, 2).unwrap()), 4);
    }
}
