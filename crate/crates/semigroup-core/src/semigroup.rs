use crate::error::SemigroupError;
use crate::table::{BoundRow, BoundTable};

/// A numerical semigroup: a subset of the non-negative integers containing
/// 0, closed under addition, with finitely many gaps.
///
/// The representation is an explicit truncation at the conductor `c`: the
/// finitely many members below `c` are stored as a sorted list, and every
/// integer `>= c` is a member by definition of the conductor. Nothing is
/// derived from generators, so every query reads off the definition
/// directly — the point of this crate is to be transparently correct.
///
/// Values are immutable after construction and all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    conductor: u64,
    members_below_conductor: Vec<u64>,
}

impl NumericalSemigroup {
    /// The full semigroup N₀: conductor 0, no gaps.
    pub fn natural_numbers() -> Self {
        Self {
            conductor: 0,
            members_below_conductor: Vec::new(),
        }
    }

    /// Builds a semigroup from its members below the stated conductor.
    ///
    /// Validation is strict: the list must be strictly increasing, start
    /// with 0 (when `conductor > 0`), stay below the conductor, leave
    /// `conductor - 1` as a gap (otherwise the stated conductor is not the
    /// true one), and be closed under addition. Closure is checked over all
    /// pairs in O(n²); construction is a cold path where correctness beats
    /// speed.
    pub fn from_members(members_below: &[u64], conductor: u64) -> Result<Self, SemigroupError> {
        if conductor == 0 {
            if !members_below.is_empty() {
                return Err(SemigroupError::UnsortedOrOutOfRange(
                    "conductor 0 admits no members below the conductor".into(),
                ));
            }
            return Ok(Self::natural_numbers());
        }
        if members_below.first() != Some(&0) {
            return Err(SemigroupError::UnsortedOrOutOfRange(
                "0 must be the first member when the conductor is positive".into(),
            ));
        }
        for w in members_below.windows(2) {
            if w[0] >= w[1] {
                return Err(SemigroupError::UnsortedOrOutOfRange(format!(
                    "member list must be strictly increasing, found {} before {}",
                    w[0], w[1]
                )));
            }
        }
        let &last = members_below.last().expect("list contains 0");
        if last >= conductor {
            return Err(SemigroupError::UnsortedOrOutOfRange(format!(
                "member {last} is not below the conductor {conductor}"
            )));
        }
        if last == conductor - 1 {
            return Err(SemigroupError::ConductorPredecessorIsMember(last));
        }
        // Sums involving any value >= c land at or above c and are members
        // for free, so only pairs from the explicit list need checking.
        for (ai, &a) in members_below.iter().enumerate() {
            for &b in &members_below[ai..] {
                let sum = a.checked_add(b).ok_or(SemigroupError::Overflow)?;
                if sum < conductor && members_below.binary_search(&sum).is_err() {
                    return Err(SemigroupError::NotClosedUnderAddition { a, b, sum });
                }
            }
        }
        Ok(Self {
            conductor,
            members_below_conductor: members_below.to_vec(),
        })
    }

    /// Smallest value from which every integer onward is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The finitely many members strictly below the conductor, ascending.
    pub fn members_below_conductor(&self) -> &[u64] {
        &self.members_below_conductor
    }

    /// Number of gaps. Every gap lies below the conductor, so this is
    /// `c` minus the number of explicit members.
    pub fn genus(&self) -> u64 {
        self.conductor - self.members_below_conductor.len() as u64
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.contains_value(x as u64)
    }

    fn contains_value(&self, x: u64) -> bool {
        x >= self.conductor || self.members_below_conductor.binary_search(&x).is_ok()
    }

    /// λ_i, the (i+1)-th smallest member. Past the explicit list the
    /// members are consecutive, so λ_i = c + (i - n) with n the list length.
    pub fn enumerate(&self, i: u64) -> Result<u64, SemigroupError> {
        let n = self.members_below_conductor.len() as u64;
        if i < n {
            Ok(self.members_below_conductor[i as usize])
        } else {
            self.conductor
                .checked_add(i - n)
                .ok_or(SemigroupError::Overflow)
        }
    }

    /// The unique index i with λ_i = x, the inverse of [`Self::enumerate`].
    pub fn inverse_enumerate(&self, x: u64) -> Result<u64, SemigroupError> {
        if x >= self.conductor {
            let n = self.members_below_conductor.len() as u64;
            // n <= c, so n + (x - c) <= x: no overflow.
            Ok(n + (x - self.conductor))
        } else {
            match self.members_below_conductor.binary_search(&x) {
                Ok(idx) => Ok(idx as u64),
                Err(_) => Err(SemigroupError::NotAMember(x)),
            }
        }
    }

    /// ⌊k⌋_Λ, the largest member no larger than k. Always defined since 0
    /// is a member; equals k whenever k is itself a member.
    pub fn semigroup_floor(&self, k: u64) -> u64 {
        if k >= self.conductor {
            return k;
        }
        // k < c implies c > 0, so the list is non-empty and starts with 0;
        // at least one member (0) is <= k.
        let idx = self.members_below_conductor.partition_point(|&m| m <= k);
        self.members_below_conductor[idx - 1]
    }

    /// ν_i by the defining count: the number of indices j with λ_i - λ_j a
    /// member, scanned directly over j = 0..=i. (For j > i the difference
    /// is negative and never a member, so the scan stops at i.)
    pub fn nu_bruteforce(&self, i: u64) -> Result<u64, SemigroupError> {
        let x = self.enumerate(i)?;
        let mut count = 0;
        for j in 0..=i {
            // enumerate is increasing, so the subtraction cannot underflow.
            if self.contains_value(x - self.enumerate(j)?) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// ν_i evaluated by splitting the divisor scan at the conductor.
    ///
    /// Substituting d = λ_j, ν_i counts the members d <= λ_i whose
    /// complement λ_i - d is again a member. Members d >= c correspond
    /// one-to-one (via e = λ_i - d) to the members e <= λ_i - c, which a
    /// single inverse-enumeration resolves; members d < c are checked
    /// against the explicit list with a second pointer that only moves
    /// downward. This runs in O(n) per call, with n the explicit list
    /// length, instead of the O(i) of [`Self::nu_bruteforce`] — the
    /// difference between hours and seconds when sweeping every index of a
    /// semigroup with a conductor near 2²⁰. The two evaluations are
    /// cross-checked against each other in the test suites.
    pub fn nu(&self, i: u64) -> Result<u64, SemigroupError> {
        let x = self.enumerate(i)?;
        let mut count = if x >= self.conductor {
            let reach = x - self.conductor;
            self.inverse_enumerate(self.semigroup_floor(reach))?
                .checked_add(1)
                .ok_or(SemigroupError::Overflow)?
        } else {
            0
        };
        let below = &self.members_below_conductor;
        let mut p = below.len();
        for &d in below {
            if d > x {
                break;
            }
            let e = x - d;
            if e >= self.conductor {
                count += 1;
                continue;
            }
            // e strictly decreases as d walks up the list, so p never has
            // to move back up.
            while p > 0 && below[p - 1] > e {
                p -= 1;
            }
            if p > 0 && below[p - 1] == e {
                count += 1;
            }
        }
        Ok(count)
    }

    /// δ_i = min{ν_j : j > i}, evaluated by scanning ν over the finite
    /// window i < j <= max(i+1, 2c - g). The cut is sound because
    /// ν_j = j - g + 1 is strictly increasing once j >= 2c - g, so indices
    /// past the window can never lower the minimum.
    pub fn order_bound_bruteforce(&self, i: u64) -> Result<u64, SemigroupError> {
        let start = i.checked_add(1).ok_or(SemigroupError::Overflow)?;
        let window_end = start.max(self.nu_tail_start()?);
        let mut best = u64::MAX;
        for j in start..=window_end {
            best = best.min(self.nu_bruteforce(j)?);
        }
        Ok(best)
    }

    /// 2c - g, the first index of the analytic tail on which
    /// ν_j = j - g + 1 holds and is strictly increasing.
    fn nu_tail_start(&self) -> Result<u64, SemigroupError> {
        let two_c = self
            .conductor
            .checked_mul(2)
            .ok_or(SemigroupError::Overflow)?;
        // g <= c, so 2c - g >= c: no underflow.
        Ok(two_c - self.genus())
    }

    /// The first `rows` rows of the (i, λ_i, ν_i, δ_i) table.
    ///
    /// ν is evaluated per index with [`Self::nu`]. The δ column needs the
    /// minimum of ν over every later index; the scan past the last row
    /// stops as soon as the running minimum reaches 2 (ν_j >= 2 for every
    /// j >= 1, since 0 and λ_j are always counted, so nothing later can be
    /// smaller) or passes 2c - g (beyond which ν only grows), after which a
    /// suffix minimum folds backwards through the stored prefix.
    pub fn bound_table(&self, rows: u64) -> Result<BoundTable, SemigroupError> {
        let n_rows = usize::try_from(rows).map_err(|_| SemigroupError::Overflow)?;
        let mut nu_vals = Vec::with_capacity(n_rows);
        for i in 0..rows {
            nu_vals.push(self.nu(i)?);
        }

        let scan_end = self.nu_tail_start()?.max(rows);
        let mut beyond = u64::MAX;
        let mut j = rows;
        while j <= scan_end && beyond > 2 {
            beyond = beyond.min(self.nu(j)?);
            j += 1;
        }

        let mut deltas = vec![0u64; n_rows];
        let mut carry = beyond; // min of ν over every index >= current i + 1
        for i in (0..n_rows).rev() {
            deltas[i] = carry;
            carry = carry.min(nu_vals[i]);
        }

        let mut out = Vec::with_capacity(n_rows);
        for i in 0..rows {
            let idx = i as usize;
            out.push(BoundRow {
                index: i,
                lambda: self.enumerate(i)?,
                nu: nu_vals[idx],
                delta: deltas[idx],
            });
        }
        Ok(BoundTable { rows: out })
    }
}
