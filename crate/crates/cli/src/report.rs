//! JSON report envelope and payloads.
//!
//! Reports serialize with a fixed field order, so two runs with the same
//! configuration and data produce byte-identical output except for the
//! `timestamp_epoch_seconds` field.

use serde::Serialize;
use std::time::{SystemTime, UNIX_EPOCH};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub timestamp_epoch_seconds: u64,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, seed: u64, result: T) -> Report<T> {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            seed,
            timestamp_epoch_seconds: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

#[derive(Debug, Serialize)]
pub struct ParabolicRow {
    pub omitted: usize,
    pub index: u64,
    pub rank: u64,
    pub witness_label: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct CoxeterRow {
    pub type_symbol: String,
    pub group_order: u64,
    pub expected: bool,
    pub verdict: bool,
    pub matches_expected: bool,
    pub parabolics: Vec<ParabolicRow>,
}

#[derive(Debug, Serialize)]
pub struct CoxeterTableResult {
    pub extended: bool,
    pub rows: Vec<CoxeterRow>,
    pub all_match: bool,
}

#[derive(Debug, Serialize)]
pub struct SquareDcResult {
    pub group: String,
    pub subgroup: String,
    pub group_order: u64,
    pub subgroup_order: u64,
    pub index: usize,
    pub rank: usize,
    pub subdegrees: Vec<u64>,
    pub method: String,
    pub trials: Option<u32>,
    pub witness_label: Option<u32>,
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct TripleCheckRow {
    pub label: u32,
    pub representative: String,
    pub verdict: bool,
}

#[derive(Debug, Serialize)]
pub struct TripleCheckResult {
    pub group: String,
    pub subgroup: String,
    pub rank: usize,
    pub element: Option<String>,
    pub element_verdict: Option<bool>,
    pub per_label: Vec<TripleCheckRow>,
    pub any: bool,
}

#[derive(Debug, Serialize)]
pub struct HeckeResult {
    pub group: String,
    pub subgroup: String,
    pub rank: usize,
    pub subdegrees: Vec<u64>,
    pub inverse_labels: Vec<u32>,
    /// Collapsed adjacency matrices, one r x r matrix per label.
    pub matrices: Vec<Vec<Vec<u64>>>,
    /// Structure-constant tensor `a[x][y][j]`.
    pub tensor: Vec<Vec<Vec<u64>>>,
    pub squaring_labels: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct DioidRow {
    pub type_symbol: String,
    pub group_order: u64,
    pub longest_square_covers: bool,
    pub axiom_checks: u64,
    pub axioms_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DioidResult {
    pub rows: Vec<DioidRow>,
    pub all_ok: bool,
}

#[derive(Debug, Serialize)]
pub struct SuiteRow {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyAllResult {
    pub suites: Vec<SuiteRow>,
    pub all_passed: bool,
}
