//! Result types for verification runs.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of a single check or of a whole run.
///
/// The derived order makes `max` the aggregation: `Fail` dominates
/// `RequiresOracle`, which dominates `Pass`.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "requires-oracle")]
    RequiresOracle,
    #[serde(rename = "fail")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::RequiresOracle => "requires-oracle",
            Status::Fail => "fail",
        };
        f.write_str(s)
    }
}

/// Full record of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// The two rays spanning the chamber whose interior contains the
    /// anticanonical class, clockwise ray first.
    pub fano_chamber: [[i64; 2]; 2],
    /// Per-check outcomes.
    pub checks: BTreeMap<String, Status>,
    /// Which factoriality certificate fired: `"factorial-newton"`,
    /// `"base-point-free"`, or `"oracle"` if neither applies.
    pub factoriality_route: String,
    /// Which smoothness certificate fired: `"bertini"`, or `"oracle"` if it
    /// does not apply.
    pub smoothness_route: String,
    /// Aggregate of all per-check outcomes.
    pub overall: Status,
}

impl VerificationReport {
    /// Convenience accessor for a single check.
    pub fn check(&self, name: &str) -> Option<Status> {
        self.checks.get(name).copied()
    }
}
