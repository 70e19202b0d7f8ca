//! Verification reports: one entry per named check, JSON round-trip and markdown rendering.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub check_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    #[serde(default)]
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
}

impl ReportEntry {
    pub fn new(check_id: impl Into<String>, verdict: Verdict) -> Self {
        ReportEntry {
            check_id: check_id.into(),
            parameters: BTreeMap::new(),
            verdict,
            witness: None,
            elapsed_ms: 0,
        }
    }

    pub fn pass(check_id: impl Into<String>) -> Self {
        Self::new(check_id, Verdict::Pass)
    }

    pub fn fail(check_id: impl Into<String>, witness: Value) -> Self {
        Self::new(check_id, Verdict::Fail).with_witness(witness)
    }

    pub fn skipped(check_id: impl Into<String>, reason: &str) -> Self {
        Self::new(check_id, Verdict::Skipped).with_witness(Value::String(reason.into()))
    }

    /// Pass when `ok`, otherwise fail carrying the lazily built witness.
    pub fn from_check(check_id: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(check_id)
        } else {
            Self::fail(check_id, witness())
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Runs `check`, stamping the wall-clock time onto the produced entry.
pub fn timed(check: impl FnOnce() -> ReportEntry) -> ReportEntry {
    let start = Instant::now();
    let mut entry = check();
    entry.elapsed_ms = start.elapsed().as_millis() as u64;
    entry
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    /// Builds a report with entries sorted by `check_id`; duplicate ids are rejected.
    pub fn from_entries(mut entries: Vec<ReportEntry>) -> Result<Self> {
        entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let report = VerificationReport { entries };
        report.validate()?;
        Ok(report)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for e in &self.entries {
            if !seen.insert(e.check_id.as_str()) {
                return Err(Error::Usage(format!("duplicate check id {}", e.check_id)));
            }
            if e.verdict == Verdict::Fail && e.witness.is_none() {
                return Err(Error::Usage(format!("failed check {} has no witness", e.check_id)));
            }
        }
        Ok(())
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for e in &self.entries {
            match e.verdict {
                Verdict::Pass => t.passed += 1,
                Verdict::Fail => t.failed += 1,
                Verdict::Skipped => t.skipped += 1,
            }
        }
        t
    }

    /// True iff every non-skipped entry passes.
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let report: VerificationReport =
            serde_json::from_str(text).map_err(|e| Error::Usage(format!("malformed report: {e}")))?;
        report.validate()?;
        Ok(report)
    }

    /// Markdown summary; failures come first, then passes, then skipped checks.
    pub fn to_markdown(&self) -> String {
        let t = self.tally();
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} skipped\n",
            self.entries.len(),
            t.passed,
            t.failed,
            t.skipped
        );
        let _ = writeln!(out, "| verdict | check | parameters | elapsed (ms) |");
        let _ = writeln!(out, "|---|---|---|---|");
        let rank = |v: Verdict| match v {
            Verdict::Fail => 0,
            Verdict::Pass => 1,
            Verdict::Skipped => 2,
        };
        let mut ordered: Vec<&ReportEntry> = self.entries.iter().collect();
        ordered.sort_by(|a, b| rank(a.verdict).cmp(&rank(b.verdict)).then(a.check_id.cmp(&b.check_id)));
        for e in &ordered {
            let params = serde_json::to_string(&e.parameters).unwrap_or_default();
            let verdict = match e.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "skipped",
            };
            let _ = writeln!(out, "| {verdict} | `{}` | `{params}` | {} |", e.check_id, e.elapsed_ms);
        }
        let failures: Vec<&&ReportEntry> = ordered.iter().filter(|e| e.verdict == Verdict::Fail).collect();
        if !failures.is_empty() {
            let _ = writeln!(out, "\n## Failures\n");
            for e in failures {
                let witness = e
                    .witness
                    .as_ref()
                    .map(|w| serde_json::to_string_pretty(w).unwrap_or_default())
                    .unwrap_or_default();
                let _ = writeln!(out, "### `{}`\n\n```json\n{witness}\n```\n", e.check_id);
            }
        }
        out
    }
}
