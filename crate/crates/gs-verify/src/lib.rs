//! Grid-driven cross-validation of the tower's closed forms against the
//! brute-force semigroup oracle.
//!
//! For every grid point (q, m) the level is materialized by the defining
//! recursion and nine checks compare the closed forms from `gs-tower`
//! against values read off the materialized semigroup: set equality of the
//! two constructions, conductor, genus, the enumeration λ, the index of
//! the semigroup floor, the ν-sequence, the order bound through the ν case
//! analysis, the fully closed order bound, and disjointness of the scaled
//! blocks. Nothing short-circuits: every check runs (and is reported) even
//! after an earlier one fails, so a report is always complete.
//!
//! ν and both δ forms are verified in one descending pass that carries the
//! running minimum of the oracle's ν values — the windowed minimum that
//! defines δ — in constant memory. The oracle's split-scan ν is itself
//! anchored to the defining direct scan on a prefix of every sweep.

mod report;

pub use report::{
    CheckName, CheckResult, GridPoint, LevelReport, Mismatch, Status, VerificationReport,
};

use std::time::Instant;

use gs_tower::{
    block_a, build_closed, build_recursive, conductor_formula, genus_formula,
    inverse_floor_closed, lambda_closed, nu_closed, order_bound_closed, order_bound_via_nu,
    TowerParams,
};

/// Extra indices beyond 2c − g swept by default: the closed forms'
/// interesting behavior ends there, the margin probes the analytic tail.
pub const DEFAULT_INDEX_MARGIN: u64 = 64;

/// Conductor cap of the default verification grid. Together with bases
/// 2..=9 this covers every branch of every case split (even/odd levels,
/// divisibility by q, all three δ regimes) in seconds of runtime.
pub const DEFAULT_GRID_CONDUCTOR_CAP: u64 = 1 << 20;

/// Indices per sweep on which the oracle's split-scan ν is re-checked
/// against the defining direct scan (which is quadratic, hence the cap).
const DIRECT_SCAN_PREFIX: u64 = 1024;

/// All (q, m) with q ∈ {2, …, 9} and conductor within the default cap.
pub fn default_grid() -> Vec<TowerParams> {
    let mut grid = Vec::new();
    for q in 2..=9u64 {
        for m in 1.. {
            let Ok(p) = TowerParams::new(q, m) else { break };
            if conductor_formula(p) > DEFAULT_GRID_CONDUCTOR_CAP {
                break;
            }
            grid.push(p);
        }
    }
    grid
}

struct LevelRun {
    q: u64,
    m: u32,
    checks: Vec<CheckResult>,
    first: Option<Mismatch>,
}

impl LevelRun {
    fn new(p: TowerParams) -> Self {
        Self {
            q: p.q(),
            m: p.m(),
            checks: Vec::with_capacity(CheckName::ALL.len()),
            first: None,
        }
    }

    fn record(&mut self, check: CheckName, range: [u64; 2], mismatch: Option<Mismatch>) {
        self.checks.push(CheckResult {
            check,
            status: if mismatch.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            range,
        });
        if self.first.is_none() {
            self.first = mismatch;
        }
    }

    fn values(&self, check: CheckName, input: u64, oracle: u64, formula: u64) -> Mismatch {
        Mismatch {
            check,
            q: self.q,
            m: self.m,
            input: Some(input),
            oracle: Some(oracle),
            formula: Some(formula),
            note: None,
        }
    }

    fn note(&self, check: CheckName, input: Option<u64>, note: String) -> Mismatch {
        Mismatch {
            check,
            q: self.q,
            m: self.m,
            input,
            oracle: None,
            formula: None,
            note: Some(note),
        }
    }
}

/// Runs all nine checks for one grid point and returns the level report
/// together with the first mismatch found (in check order, then by input).
///
/// Construction errors — budget exceeded, overflow — are reported as
/// failures of every check rather than aborting the process.
pub fn verify_level(
    p: TowerParams,
    index_margin: u64,
    member_budget: u64,
) -> (LevelReport, Option<Mismatch>) {
    let started = Instant::now();
    let mut run = LevelRun::new(p);

    let oracle = match build_recursive(p, member_budget) {
        Ok(oracle) => oracle,
        Err(err) => {
            // Nothing can be checked without the oracle; report the same
            // cause on every check so the report stays complete.
            for check in CheckName::ALL {
                let note = run.note(check, None, err.to_string());
                run.record(check, [0, 0], Some(note));
            }
            return finish(run, started);
        }
    };

    let c = conductor_formula(p);
    let g = genus_formula(p);
    // c − g members sit below the conductor, so 2c − g = c + (c − g) stays
    // far inside u64 for any budgeted level; only an absurd margin can
    // push the sweep end (or its successor, needed to seed the δ carry)
    // out of range.
    let Some(end) = c
        .checked_add(c - g)
        .and_then(|v| v.checked_add(index_margin))
        .filter(|&v| v < u64::MAX)
    else {
        for check in CheckName::ALL {
            let note = run.note(check, None, format!("index margin {index_margin} overflows the sweep range"));
            run.record(check, [0, 0], Some(note));
        }
        return finish(run, started);
    };

    // set-equality
    let mismatch = match build_closed(p, member_budget) {
        Ok(closed) if closed == oracle => None,
        Ok(closed) => {
            let divergence = oracle
                .members_below_conductor()
                .iter()
                .zip(closed.members_below_conductor())
                .enumerate()
                .find(|(_, (o, f))| o != f)
                .map(|(t, (&o, &f))| run.values(CheckName::SetEquality, t as u64, o, f));
            Some(divergence.unwrap_or_else(|| {
                run.note(
                    CheckName::SetEquality,
                    None,
                    "member sets differ in length or conductor".into(),
                )
            }))
        }
        Err(err) => Some(run.note(CheckName::SetEquality, None, err.to_string())),
    };
    run.record(CheckName::SetEquality, [0, c], mismatch);

    // conductor
    let mismatch = (oracle.conductor() != c)
        .then(|| run.values(CheckName::Conductor, 0, oracle.conductor(), c));
    run.record(CheckName::Conductor, [0, 0], mismatch);

    // genus
    let mismatch =
        (oracle.genus() != g).then(|| run.values(CheckName::Genus, 0, oracle.genus(), g));
    run.record(CheckName::Genus, [0, 0], mismatch);

    // lambda
    let mut mismatch = None;
    for t in 0..=end {
        match (lambda_closed(p, t), oracle.enumerate(t)) {
            (Ok(formula), Ok(oracle_value)) => {
                if formula != oracle_value {
                    mismatch = Some(run.values(CheckName::Lambda, t, oracle_value, formula));
                    break;
                }
            }
            (formula, oracle_value) => {
                let note = format!("evaluation error: formula {formula:?}, oracle {oracle_value:?}");
                mismatch = Some(run.note(CheckName::Lambda, Some(t), note));
                break;
            }
        }
    }
    run.record(CheckName::Lambda, [0, end], mismatch);

    // inverse-floor
    let mut mismatch = None;
    for k in 0..=2 * c {
        let oracle_value = oracle
            .inverse_enumerate(oracle.semigroup_floor(k))
            .expect("floor of k is a member");
        match inverse_floor_closed(p, k) {
            Ok(formula) if formula == oracle_value => {}
            Ok(formula) => {
                mismatch = Some(run.values(CheckName::InverseFloor, k, oracle_value, formula));
                break;
            }
            Err(err) => {
                mismatch = Some(run.note(CheckName::InverseFloor, Some(k), err.to_string()));
                break;
            }
        }
    }
    run.record(CheckName::InverseFloor, [0, 2 * c], mismatch);

    // nu, delta-lemma, delta-closed: one descending pass. The running
    // minimum of the oracle ν values over (i, end+1] is exactly the
    // windowed minimum defining δ_i, because end >= 2c − g and ν only
    // grows from there on.
    let mut nu_mis = None;
    let mut lemma_mis = None;
    let mut closed_mis = None;
    match oracle.nu(end + 1) {
        Err(err) => {
            let note = format!("oracle ν evaluation failed: {err}");
            nu_mis = Some(run.note(CheckName::Nu, Some(end + 1), note.clone()));
            lemma_mis = Some(run.note(CheckName::DeltaLemma, Some(end + 1), note.clone()));
            closed_mis = Some(run.note(CheckName::DeltaClosed, Some(end + 1), note));
        }
        Ok(top) => {
            let mut carry = top;
            let mut i = end;
            loop {
                let nu_oracle = oracle.nu(i).expect("ν in swept range");
                // Later mismatches are overwritten by earlier indices as
                // the pass descends, leaving the smallest offending input.
                match nu_closed(p, i) {
                    Ok(formula) if formula == nu_oracle => {}
                    Ok(formula) => {
                        nu_mis = Some(run.values(CheckName::Nu, i, nu_oracle, formula));
                    }
                    Err(err) => {
                        nu_mis = Some(run.note(CheckName::Nu, Some(i), err.to_string()));
                    }
                }
                if i <= DIRECT_SCAN_PREFIX {
                    let direct = oracle.nu_bruteforce(i).expect("ν in swept range");
                    if direct != nu_oracle {
                        let mut mis = run.values(CheckName::Nu, i, direct, nu_oracle);
                        mis.note = Some("oracle split scan disagrees with direct scan".into());
                        nu_mis = Some(mis);
                    }
                }
                let delta_oracle = carry;
                match order_bound_via_nu(p, i) {
                    Ok(formula) if formula == delta_oracle => {}
                    Ok(formula) => {
                        lemma_mis = Some(run.values(CheckName::DeltaLemma, i, delta_oracle, formula));
                    }
                    Err(err) => {
                        lemma_mis = Some(run.note(CheckName::DeltaLemma, Some(i), err.to_string()));
                    }
                }
                match order_bound_closed(p, i) {
                    Ok(formula) if formula == delta_oracle => {}
                    Ok(formula) => {
                        closed_mis =
                            Some(run.values(CheckName::DeltaClosed, i, delta_oracle, formula));
                    }
                    Err(err) => {
                        closed_mis = Some(run.note(CheckName::DeltaClosed, Some(i), err.to_string()));
                    }
                }
                carry = carry.min(nu_oracle);
                if i == 0 {
                    break;
                }
                i -= 1;
            }
        }
    }
    run.record(CheckName::Nu, [0, end], nu_mis);
    run.record(CheckName::DeltaLemma, [0, end], lemma_mis);
    run.record(CheckName::DeltaClosed, [0, end], closed_mis);

    // block-disjointness
    let half = p.m() / 2;
    let mut mismatch = None;
    let mut prev_hi: Option<u64> = None;
    let mut total_len = 0u64;
    for index in 1..=half {
        let block = block_a(p, index).expect("block index in range");
        let lo = block.scale * block.start;
        let hi = block.scale * (block.start + block.len - 1);
        if let Some(prev) = prev_hi {
            if prev >= lo {
                let mut mis = run.values(CheckName::BlockDisjointness, index as u64, prev, lo);
                mis.note = Some("scaled blocks overlap or are out of order".into());
                mismatch = Some(mis);
                break;
            }
        }
        prev_hi = Some(hi);
        total_len += block.len;
    }
    if mismatch.is_none() {
        if let Some(prev) = prev_hi {
            if prev >= c {
                let mut mis = run.values(CheckName::BlockDisjointness, half as u64, c, prev);
                mis.note = Some("largest scaled block value reaches the conductor".into());
                mismatch = Some(mis);
            }
        }
        let expected = p.q().pow(half) - 1;
        if mismatch.is_none() && total_len != expected {
            let mut mis = run.values(CheckName::BlockDisjointness, half as u64, expected, total_len);
            mis.note = Some("block lengths do not sum to the member count".into());
            mismatch = Some(mis);
        }
    }
    run.record(
        CheckName::BlockDisjointness,
        [if half == 0 { 0 } else { 1 }, half as u64],
        mismatch,
    );

    finish(run, started)
}

fn finish(run: LevelRun, started: Instant) -> (LevelReport, Option<Mismatch>) {
    (
        LevelReport {
            q: run.q,
            m: run.m,
            checks: run.checks,
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
        run.first,
    )
}

/// Verifies every grid point in order and aggregates one report. Grid
/// points are independent; they are simply evaluated sequentially here.
pub fn verify_grid(
    grid: &[TowerParams],
    index_margin: u64,
    member_budget: u64,
) -> VerificationReport {
    let started = Instant::now();
    let mut checks = Vec::with_capacity(grid.len());
    let mut first_mismatch = None;
    for &p in grid {
        let (level, mismatch) = verify_level(p, index_margin, member_budget);
        checks.push(level);
        if first_mismatch.is_none() {
            first_mismatch = mismatch;
        }
    }
    VerificationReport {
        grid: grid
            .iter()
            .map(|p| GridPoint { q: p.q(), m: p.m() })
            .collect(),
        checks,
        first_mismatch,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}
