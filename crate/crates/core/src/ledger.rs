//! The atomic verification record.
//!
//! Every inequality check in the workbench produces one `Ledger` row with
//! both sides, the gap, the tolerance under which it was judged and a
//! verdict. Rows serialize as JSON lines and as CSV with the fixed column
//! order `name,lhs,rhs,gap,tol,verdict,provenance`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// lhs ≤ rhs with a gap beyond tolerance.
    Holds,
    /// |rhs − lhs| within tolerance.
    Equality,
    /// lhs exceeds rhs beyond tolerance.
    Violated,
    /// A hypothesis of the inequality failed; nothing is asserted.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "Holds",
            Verdict::Equality => "Equality",
            Verdict::Violated => "Violated",
            Verdict::Skipped => "Skipped",
        };
        f.write_str(s)
    }
}

/// One inequality check: `lhs ≤ rhs` up to `tol`, with provenance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Ledger {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs
    pub gap: f64,
    pub tol: f64,
    pub verdict: Verdict,
    /// Which inequality this row certifies.
    pub provenance: String,
    /// Free-form remarks (hypothesis failures, recorded slack, …).
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Ledger {
    /// Judges `lhs ≤ rhs` with tolerance `tol`:
    /// Equality iff |gap| ≤ tol, Violated iff gap < −tol, Holds otherwise.
    pub fn compare(name: &str, lhs: f64, rhs: f64, tol: f64, provenance: &str) -> Ledger {
        let gap = rhs - lhs;
        let verdict = if !gap.is_finite() {
            if lhs.is_infinite() && lhs > 0.0 {
                // lhs = +∞: vacuous unless rhs is also infinite
                Verdict::Skipped
            } else {
                Verdict::Holds
            }
        } else if gap.abs() <= tol {
            Verdict::Equality
        } else if gap < -tol {
            Verdict::Violated
        } else {
            Verdict::Holds
        };
        Ledger {
            name: name.to_string(),
            lhs,
            rhs,
            gap,
            tol,
            verdict,
            provenance: provenance.to_string(),
            note: String::new(),
        }
    }

    pub fn skipped(name: &str, provenance: &str, reason: &str) -> Ledger {
        Ledger {
            name: name.to_string(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            gap: f64::NAN,
            tol: f64::NAN,
            verdict: Verdict::Skipped,
            provenance: provenance.to_string(),
            note: reason.to_string(),
        }
    }

    pub fn with_note(mut self, note: &str) -> Ledger {
        self.note = note.to_string();
        self
    }

    pub fn csv_header() -> &'static str {
        "name,lhs,rhs,gap,tol,verdict,provenance"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.name, self.lhs, self.rhs, self.gap, self.tol, self.verdict, self.provenance
        )
    }
}

/// Writes rows as JSON lines.
pub fn write_jsonl<W: Write>(mut w: W, rows: &[Ledger]) -> std::io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut w, row)?;
        writeln!(w)?;
    }
    Ok(())
}

/// Writes rows as CSV with the fixed schema.
pub fn write_csv<W: Write>(mut w: W, rows: &[Ledger]) -> std::io::Result<()> {
    writeln!(w, "{}", Ledger::csv_header())?;
    for row in rows {
        writeln!(w, "{}", row.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        assert_eq!(Ledger::compare("a", 1.0, 1.0 + 1e-9, 1e-6, "p").verdict, Verdict::Equality);
        assert_eq!(Ledger::compare("b", 1.0, 2.0, 1e-6, "p").verdict, Verdict::Holds);
        assert_eq!(Ledger::compare("c", 2.0, 1.0, 1e-6, "p").verdict, Verdict::Violated);
        assert_eq!(
            Ledger::compare("d", f64::INFINITY, 1.0, 1e-6, "p").verdict,
            Verdict::Skipped
        );
    }

    #[test]
    fn csv_and_jsonl_round_trip() {
        let rows = vec![Ledger::compare("x", 0.5, 1.0, 1e-6, "test")];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("name,lhs"));
        assert!(text.contains("x,0.5,1,0.5"));

        let mut jl = Vec::new();
        write_jsonl(&mut jl, &rows).unwrap();
        let back: Ledger = serde_json::from_slice(jl.trim_ascii_end()).unwrap();
        assert_eq!(back.name, "x");
        assert_eq!(back.verdict, Verdict::Holds);
    }
}
