//! Verification reports: ordered, typed check entries with provenance.

use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// A number stated in the published construction.
    #[serde(rename = "paper")]
    Published,
    #[serde(rename = "trivial")]
    Trivial,
    /// Computed by an independent oracle.
    #[serde(rename = "derived")]
    Derived,
    /// Follows from the per-orbit exclusion model rather than a direct proof.
    #[serde(rename = "model-derived")]
    ModelDerived,
    /// A cohomological statement recorded, not computed.
    #[serde(rename = "assumed-per-paper")]
    AssumedPublished,
}

impl Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Published => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
            Provenance::ModelDerived => "model-derived",
            Provenance::AssumedPublished => "assumed-per-paper",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecidable,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecidable => "UNDECIDABLE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check_id: String,
    pub paper_anchor: String,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    pub status: Status,
}

impl CheckEntry {
    pub fn new(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        expected: impl Display,
        actual: impl Display,
        status: Status,
    ) -> Self {
        Self {
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            provenance,
            status,
        }
    }

    /// Passes iff `expected == actual`.
    pub fn equal<T: Display + PartialEq>(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        expected: T,
        actual: T,
    ) -> Self {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Self::new(check_id, anchor, provenance, expected, actual, status)
    }

    pub fn holds(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        provenance: Provenance,
        ok: bool,
    ) -> Self {
        Self::equal(check_id, anchor, provenance, true, ok)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub type ReportFragment = Vec<CheckEntry>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    #[serde(rename = "T")]
    pub precision: u32,
    pub d_bound: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self { precision: 12, d_bound: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub command: String,
    pub primes: Vec<u64>,
    pub coefficients: Vec<i64>,
    pub seed: u64,
    pub trials: usize,
    pub pdo_budget: Budget,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub undecidable: usize,
    pub overall: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub metadata: ReportMetadata,
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts entries by `check_id` and computes the summary. Undecidable
    /// entries are counted but never turn an otherwise passing report red.
    pub fn assemble(metadata: ReportMetadata, mut entries: Vec<CheckEntry>) -> Self {
        entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
        let failed = count(Status::Fail);
        let summary = Summary {
            total: entries.len(),
            passed: count(Status::Pass),
            failed,
            undecidable: count(Status::Undecidable),
            overall: if failed == 0 { Status::Pass } else { Status::Fail },
        };
        Self { metadata, entries, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.overall == Status::Pass
    }

    pub fn entry(&self, check_id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.check_id == check_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per entry plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let width = self.entries.iter().map(|e| e.check_id.len()).max().unwrap_or(0);
        for e in &self.entries {
            out.push_str(&format!(
                "[{:<11}] {:<width$}  expected={} actual={} ({})\n",
                e.status.to_string(),
                e.check_id,
                e.expected,
                e.actual,
                e.provenance,
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} checks, {} passed, {} failed, {} undecidable\n",
            s.overall, s.total, s.passed, s.failed, s.undecidable
        ));
        out
    }
}
