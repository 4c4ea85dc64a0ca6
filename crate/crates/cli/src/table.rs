//! Regeneration of the expansion tables, with published rows re-checked.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use phibase::zeckendorf::shift_expansion;

use crate::reference;
use crate::report::PaperDiscrepancy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// N as a sum of φ powers.
    Phi,
    /// N·F_n as a sum of shifted Fibonacci numbers.
    Fib,
    /// N·L_n as a sum of shifted Lucas numbers.
    Lucas,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Phi => "phi",
            TableKind::Fib => "fib",
            TableKind::Lucas => "lucas",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    /// Offsets descending, matching the rendering order.
    pub offsets: Vec<i64>,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: String,
    pub max_n: u64,
    pub rows: Vec<TableRow>,
    pub discrepancies: Vec<PaperDiscrepancy>,
}

/// Rows for N = 2..=max_n derived from the exact expansion. Rows whose
/// published counterpart fails re-verification carry a note, and the full
/// discrepancy records ride along.
pub fn generate(kind: TableKind, max_n: u64) -> Table {
    let mut rows = Vec::with_capacity((max_n - 1) as usize);
    for n in 2..=max_n {
        let idx = shift_expansion(&BigInt::from(n)).expect("n >= 2");
        let mut offsets: Vec<i64> = idx.exponents().to_vec();
        offsets.reverse();
        let text = match kind {
            TableKind::Phi => render_phi_row(n, &offsets),
            TableKind::Fib => render_fib_row(n, &offsets),
            TableKind::Lucas => render_lucas_row(n, &offsets),
        };
        let note = reference::shift_row(n).and_then(|printed| {
            let mut printed_sorted = printed.to_vec();
            printed_sorted.sort_unstable();
            (printed_sorted != idx.exponents())
                .then(|| "published row differs; see discrepancies".to_string())
        });
        rows.push(TableRow { n, offsets, text, note });
    }
    let mut discrepancies = reference::shift_row_discrepancies(2, max_n);
    discrepancies.extend(reference::zeckendorf_row_discrepancies(2, max_n));
    Table { kind: kind.name().to_string(), max_n, rows, discrepancies }
}

impl Table {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("table serializes");
        out.push('\n');
        out
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> io::Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        csv.write_record(["n", "expansion", "note"])?;
        for row in &self.rows {
            csv.write_record([
                row.n.to_string().as_str(),
                &row.text,
                row.note.as_deref().unwrap_or(""),
            ])?;
        }
        csv.flush()
    }

    pub fn write_text<W: Write>(&self, mut writer: W) -> io::Result<()> {
        for row in &self.rows {
            writeln!(writer, "{}", row.text)?;
        }
        if !self.discrepancies.is_empty() {
            writeln!(writer)?;
            writeln!(writer, "# published rows failing exact re-verification:")?;
            for disc in &self.discrepancies {
                writeln!(writer, "#   {}: printed \"{}\"", disc.location, disc.paper_value)?;
                writeln!(writer, "#     {}", disc.computed_value)?;
            }
        }
        Ok(())
    }
}

/// "2 = phi^1 + phi^-2", offsets descending.
pub fn render_phi_row(n: u64, offsets_desc: &[i64]) -> String {
    let terms: Vec<String> = offsets_desc.iter().map(|i| format!("phi^{i}")).collect();
    format!("{n} = {}", terms.join(" + "))
}

/// "2F_n = F_{n+1} + F_{n-2}", offsets descending.
pub fn render_fib_row(n: u64, offsets_desc: &[i64]) -> String {
    format!("{n}F_n = {}", render_shifted_terms('F', offsets_desc))
}

/// "2L_n = L_{n+1} + L_{n-2}", offsets descending.
pub fn render_lucas_row(n: u64, offsets_desc: &[i64]) -> String {
    format!("{n}L_n = {}", render_shifted_terms('L', offsets_desc))
}

/// "6 = F_2 + F_5", indices ascending.
pub fn render_zeckendorf_row(n: u64, indices_asc: &[i64]) -> String {
    let terms: Vec<String> = indices_asc.iter().map(|k| format!("F_{k}")).collect();
    format!("{n} = {}", terms.join(" + "))
}

fn render_shifted_terms(symbol: char, offsets_desc: &[i64]) -> String {
    let terms: Vec<String> = offsets_desc
        .iter()
        .map(|&i| match i {
            0 => format!("{symbol}_n"),
            i if i > 0 => format!("{symbol}_{{n+{i}}}"),
            i => format!("{symbol}_{{n-{}}}", -i),
        })
        .collect();
    terms.join(" + ")
}
