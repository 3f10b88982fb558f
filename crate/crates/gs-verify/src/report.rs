use serde::{Deserialize, Serialize};

/// The nine per-level checks. Every level report contains exactly these,
/// in this order; an absent check is treated as a failure by consumers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    /// Recursive and closed-form construction produce the same member set.
    SetEquality,
    /// Conductor formula equals the conductor of the materialized level.
    Conductor,
    /// Genus formula equals the gap count of the materialized level.
    Genus,
    /// Closed-form enumeration equals the oracle enumeration.
    Lambda,
    /// Closed-form index-of-floor equals the oracle λ⁻¹∘⌊·⌋.
    InverseFloor,
    /// Closed-form ν equals the oracle ν (split scan anchored to the
    /// direct scan on a prefix).
    Nu,
    /// δ through the ν case analysis equals the oracle windowed minimum.
    DeltaLemma,
    /// Fully closed-form δ equals the oracle windowed minimum.
    DeltaClosed,
    /// Scaled blocks are increasing, pairwise disjoint, below the
    /// conductor, and their lengths sum to the member count below it.
    BlockDisjointness,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::SetEquality,
        CheckName::Conductor,
        CheckName::Genus,
        CheckName::Lambda,
        CheckName::InverseFloor,
        CheckName::Nu,
        CheckName::DeltaLemma,
        CheckName::DeltaClosed,
        CheckName::BlockDisjointness,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::SetEquality => "set-equality",
            CheckName::Conductor => "conductor",
            CheckName::Genus => "genus",
            CheckName::Lambda => "lambda",
            CheckName::InverseFloor => "inverse-floor",
            CheckName::Nu => "nu",
            CheckName::DeltaLemma => "delta-lemma",
            CheckName::DeltaClosed => "delta-closed",
            CheckName::BlockDisjointness => "block-disjointness",
        }
    }
}

impl std::fmt::Display for CheckName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check at one grid point, with the inclusive
/// index interval it swept (degenerate [0, 0] for scalar comparisons).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: CheckName,
    pub status: Status,
    pub range: [u64; 2],
}

/// The first disagreement found, with enough context to reproduce it.
/// `oracle`/`formula` are absent when the failure is an error (budget,
/// overflow) rather than a numeric mismatch; `note` then says which.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: CheckName,
    pub q: u64,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One grid point, mirrored into the report for a self-contained file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub q: u64,
    pub m: u32,
}

/// All check outcomes at one grid point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub q: u64,
    pub m: u32,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

/// Aggregated outcome of a verification run. Two runs over the same grid
/// produce identical reports except for the elapsed fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub grid: Vec<GridPoint>,
    pub checks: Vec<LevelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// True iff every check at every grid point passed and none of the
    /// nine expected checks is missing anywhere.
    pub fn overall_pass(&self) -> bool {
        self.checks.iter().all(|level| {
            level.checks.len() == CheckName::ALL.len()
                && level
                    .checks
                    .iter()
                    .zip(CheckName::ALL)
                    .all(|(result, expected)| {
                        result.check == expected && result.status == Status::Pass
                    })
        })
    }
}
