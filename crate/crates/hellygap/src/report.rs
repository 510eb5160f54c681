//! Structured pass/fail records for theorem checks.

use serde::Serialize;

/// One verified inequality: `lhs <= rhs` (or an exact relation, with
/// `pass` recording the outcome) plus enough context to locate a
/// failure witness.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub id: String,
    pub context: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    /// A guard stopped the check before it ran; `pass` is meaningless.
    pub skipped: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TheoremReport {
    pub rows: Vec<ReportRow>,
}

impl TheoremReport {
    pub fn new() -> TheoremReport {
        TheoremReport::default()
    }

    /// Records `lhs <= rhs`.
    pub fn check_le(&mut self, id: &str, context: impl Into<String>, lhs: i64, rhs: i64) {
        self.rows.push(ReportRow {
            id: id.to_string(),
            context: context.into(),
            lhs,
            rhs,
            pass: lhs <= rhs,
            skipped: false,
        });
    }

    /// Records `lhs == rhs`.
    pub fn check_eq(&mut self, id: &str, context: impl Into<String>, lhs: i64, rhs: i64) {
        self.rows.push(ReportRow {
            id: id.to_string(),
            context: context.into(),
            lhs,
            rhs,
            pass: lhs == rhs,
            skipped: false,
        });
    }

    /// Records a check a guard prevented from running.
    pub fn skip(&mut self, id: &str, context: impl Into<String>) {
        self.rows.push(ReportRow {
            id: id.to_string(),
            context: context.into(),
            lhs: 0,
            rhs: 0,
            pass: false,
            skipped: true,
        });
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: TheoremReport) {
        self.rows.extend(other.rows);
    }

    /// True when every executed row passed; skipped rows don't count.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.skipped || r.pass)
    }

    pub fn failures(&self) -> Vec<&ReportRow> {
        self.rows.iter().filter(|r| !r.skipped && !r.pass).collect()
    }
}
