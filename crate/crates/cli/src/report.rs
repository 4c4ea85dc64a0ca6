//! Verification report data model and its text/CSV/JSON renderings.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// One verified identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub n_value: u64,
    pub check_name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        n_value: u64,
        check_name: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
        pass: bool,
    ) -> Self {
        CheckRecord {
            n_value,
            check_name: check_name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        }
    }
}

/// A published table row that fails exact re-verification. These are data,
/// not failures: the mathematics passes while the printed row does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperDiscrepancy {
    pub location: String,
    pub paper_value: String,
    pub computed_value: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
}

/// Outcome of a verification run. `summary` is always derived from `checks`,
/// so the two cannot drift apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub range: (u64, u64),
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub paper_discrepancies: Vec<PaperDiscrepancy>,
}

impl VerifyReport {
    pub fn new(
        range: (u64, u64),
        checks: Vec<CheckRecord>,
        paper_discrepancies: Vec<PaperDiscrepancy>,
    ) -> Self {
        let summary = Summary {
            total: checks.len(),
            failed: checks.iter().filter(|c| !c.pass).count(),
        };
        VerifyReport { range, checks, summary, paper_discrepancies }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// One check per row; discrepancies follow as informational rows with
    /// `pass = true` and the location folded into the check name.
    pub fn write_csv<W: Write>(&self, writer: W) -> io::Result<()> {
        let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
        csv.write_record(["n_value", "check_name", "lhs", "rhs", "pass"])?;
        for check in &self.checks {
            csv.serialize(check)?;
        }
        for disc in &self.paper_discrepancies {
            csv.write_record([
                "",
                &format!("paper_discrepancy[{}]", disc.location),
                &disc.paper_value,
                &disc.computed_value,
                "true",
            ])?;
        }
        csv.flush()
    }

    /// Human-readable rendering: per-check-name totals, every failure in
    /// full, and the discrepancy list.
    pub fn write_text<W: Write>(&self, mut writer: W) -> io::Result<()> {
        writeln!(writer, "verification range: {}..={}", self.range.0, self.range.1)?;
        let mut by_name: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for check in &self.checks {
            let name = check.check_name.split('[').next().unwrap_or(&check.check_name);
            let entry = by_name.entry(name).or_default();
            entry.0 += 1;
            if !check.pass {
                entry.1 += 1;
            }
        }
        for (name, (total, failed)) in &by_name {
            writeln!(writer, "  {name}: {} of {total} passed", total - failed)?;
        }
        let failures: Vec<&CheckRecord> = self.checks.iter().filter(|c| !c.pass).collect();
        if !failures.is_empty() {
            writeln!(writer, "failed checks:")?;
            for check in failures {
                writeln!(
                    writer,
                    "  N={} {}: lhs={} rhs={}",
                    check.n_value, check.check_name, check.lhs, check.rhs
                )?;
            }
        }
        if !self.paper_discrepancies.is_empty() {
            writeln!(writer, "published-table discrepancies (informational):")?;
            for disc in &self.paper_discrepancies {
                writeln!(writer, "  {}: printed \"{}\"", disc.location, disc.paper_value)?;
                writeln!(writer, "    exact check: {}", disc.computed_value)?;
            }
        }
        writeln!(
            writer,
            "summary: {} — {} checks, {} failed",
            if self.summary.failed == 0 { "PASS" } else { "FAIL" },
            self.summary.total,
            self.summary.failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> VerifyReport {
        VerifyReport::new(
            (1, 3),
            vec![
                CheckRecord::new(1, "roundtrip", "1", "1", true),
                CheckRecord::new(2, "thm1", "2", "2", true),
                CheckRecord::new(3, "thm1", "4", "3", false),
            ],
            vec![PaperDiscrepancy {
                location: "shift table row 12".into(),
                paper_value: "12F_n = ...".into(),
                computed_value: "sums to 14".into(),
            }],
        )
    }

    #[test]
    fn summary_derived_from_checks() {
        let report = sample_report();
        assert_eq!(report.summary.total, 3);
        assert_eq!(report.summary.failed, 1);
    }

    #[test]
    fn json_roundtrip() {
        let report = sample_report();
        let parsed: VerifyReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn text_rendering_mentions_failures() {
        let report = sample_report();
        let mut buf = Vec::new();
        report.write_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("thm1: 1 of 2 passed"));
        assert!(text.contains("N=3 thm1"));
        assert!(text.contains("shift table row 12"));
        assert!(text.contains("summary: FAIL — 3 checks, 1 failed"));
    }

    #[test]
    fn csv_has_one_row_per_check() {
        let report = sample_report();
        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // header + 3 checks + 1 discrepancy
        assert_eq!(text.lines().count(), 5);
        assert!(text.lines().last().unwrap().contains("paper_discrepancy[shift table row 12]"));
    }
}
