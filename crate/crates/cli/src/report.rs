//! Report documents. Field order is fixed by declaration order, so identical
//! runs serialize identically apart from `timing_ms`.

use serde::Serialize;

use perfcode::verify::SuiteReport;
use perfcode::{Group, Permutation};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn of(g: &Group) -> Self {
        GroupSummary {
            degree: g.degree(),
            order: g.order(),
            generators: strings(g.generators()),
        }
    }
}

pub fn strings(xs: &[Permutation]) -> Vec<String> {
    xs.iter().map(Permutation::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct TraceStep {
    pub step: &'static str,
    pub order: usize,
}

#[derive(Debug, Serialize)]
pub struct CheckInput {
    pub group: String,
    pub subgroup: String,
}

#[derive(Debug, Serialize)]
pub struct CrossCheck {
    pub basic_criterion: bool,
    pub basic_witness: Option<String>,
    /// `found`, `none`, or `skipped` when outside the search bounds.
    pub oracle: &'static str,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckDocument {
    pub schema: u32,
    pub command: &'static str,
    pub input: CheckInput,
    pub group: GroupSummary,
    pub subgroup: GroupSummary,
    pub is_perfect_code: bool,
    pub path: &'static str,
    pub witness: Option<String>,
    pub reduction_trace: Vec<TraceStep>,
    pub connection_set: Option<Vec<String>>,
    pub cross_check: Option<CrossCheck>,
    pub timing_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct SampleRow {
    pub generator: String,
    pub order: usize,
    pub is_perfect_code: bool,
    pub psl_case: Option<&'static str>,
    pub matches: bool,
}

#[derive(Debug, Serialize)]
pub struct SampleDocument {
    pub schema: u32,
    pub command: &'static str,
    pub input: CheckInput,
    pub group: GroupSummary,
    pub rows: Vec<SampleRow>,
    pub all_match: bool,
    pub timing_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct VerifyInput {
    pub suite: String,
    pub max_order: usize,
    pub oracle_bound: usize,
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct GroupTally {
    pub group: String,
    pub order: usize,
    pub pairs: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct FailureEntry {
    pub group: String,
    pub subgroup: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument {
    pub schema: u32,
    pub command: &'static str,
    pub input: VerifyInput,
    pub passed: bool,
    pub pairs_tested: usize,
    pub skipped: usize,
    pub groups: Vec<GroupTally>,
    pub failures: Vec<FailureEntry>,
    pub timing_ms: u64,
}

impl VerifyDocument {
    pub fn new(input: VerifyInput, report: &SuiteReport, timing_ms: u64) -> Self {
        VerifyDocument {
            schema: SCHEMA_VERSION,
            command: "verify",
            input,
            passed: report.passed(),
            pairs_tested: report.pairs_tested(),
            skipped: report.skipped(),
            groups: report
                .groups
                .iter()
                .map(|t| GroupTally {
                    group: t.group.clone(),
                    order: t.order,
                    pairs: t.pairs,
                    skipped: t.skipped,
                })
                .collect(),
            failures: report
                .failures
                .iter()
                .map(|f| FailureEntry {
                    group: f.group.clone(),
                    subgroup: f.subgroup.clone(),
                    detail: f.detail.clone(),
                })
                .collect(),
            timing_ms,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SylowSummary {
    pub order: usize,
    pub generators: Vec<String>,
    pub cyclic: bool,
    pub dihedral: bool,
    pub abelian: bool,
    pub elementary_abelian: bool,
}

impl SylowSummary {
    pub fn of(s: &Group) -> Self {
        SylowSummary {
            order: s.order(),
            generators: strings(s.generators()),
            cyclic: s.is_cyclic(),
            dihedral: s.is_dihedral(),
            abelian: s.is_abelian(),
            elementary_abelian: s.is_elementary_abelian(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FieldSummary {
    pub p: u64,
    pub k: usize,
    /// Constant term first.
    pub modulus: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct GroupInfoInput {
    pub group: String,
}

#[derive(Debug, Serialize)]
pub struct GroupInfoDocument {
    pub schema: u32,
    pub command: &'static str,
    pub input: GroupInfoInput,
    pub group: GroupSummary,
    pub two_part: u64,
    pub sylow2: SylowSummary,
    pub every_subgroup_is_perfect_code: bool,
    pub field: Option<FieldSummary>,
    pub timing_ms: u64,
}
