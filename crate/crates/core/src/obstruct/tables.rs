//! Regeneration of the `(f_b, g_n)` tables and comparison against the
//! recorded rows.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{CanonicalPoly, IntPoly};
use crate::knotpres::Sign;

use super::closed::{decompose, f_poly, g_poly};
use super::ObstructError;

/// The recorded rows, tab separated: `p, n, 2n=bp+a, f_b, g_n`.
pub const GOLDEN_TABLES: &str = include_str!("../../data/golden_tables.tsv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
    pub f: CanonicalPoly,
    pub g: CanonicalPoly,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let split = format!("{} = {}({})+{}", 2 * self.n, self.b, self.p, self.a);
        write!(
            f,
            "{:>3}  {:<14}  {:<32}  {}",
            self.n,
            split,
            self.f.to_string(),
            self.g
        )
    }
}

/// One row as written in the golden file, before any normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub line: usize,
    pub p: u64,
    pub n: i64,
    pub f: IntPoly,
    pub g: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("golden table line {line}: {reason}")]
pub struct GoldenParseError {
    pub line: usize,
    pub reason: String,
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>, GoldenParseError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let err = |reason: String| GoldenParseError { line, reason };
        let cols: Vec<&str> = raw.split('\t').collect();
        let [p, n, _, f, g] = cols[..] else {
            return Err(err(format!("expected 5 tab-separated fields, got {}", cols.len())));
        };
        rows.push(GoldenRow {
            line,
            p: p.trim().parse().map_err(|e| err(format!("p: {e}")))?,
            n: n.trim().parse().map_err(|e| err(format!("n: {e}")))?,
            f: f.trim().parse().map_err(|e| err(format!("f: {e}")))?,
            g: g.trim().parse().map_err(|e| err(format!("g: {e}")))?,
        });
    }
    Ok(rows)
}

pub fn table_row(n: i64, p: u64) -> Result<TableRow, ObstructError> {
    let (a, b) = decompose(n, p)?;
    Ok(TableRow {
        p,
        n,
        a,
        b,
        f: f_poly(b, Sign::Plus)?,
        g: g_poly(n, p)?,
    })
}

/// Rows for `n` in `lo..=hi`, skipping `n` without a valid decomposition.
pub fn generate_table(p: u64, lo: i64, hi: i64) -> Vec<TableRow> {
    (lo..=hi).filter_map(|n| table_row(n, p).ok()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub line: usize,
    pub n: i64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub rows: Vec<TableRow>,
    pub mismatches: Vec<Mismatch>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && !self.rows.is_empty()
    }
}

/// Regenerates every golden row for `p` and compares coefficient lists
/// exactly. `None` when the file has no rows for `p`.
pub fn verify_table(golden: &[GoldenRow], p: u64) -> Option<TableCheck> {
    let wanted: Vec<&GoldenRow> = golden.iter().filter(|r| r.p == p).collect();
    if wanted.is_empty() {
        return None;
    }
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for g in wanted {
        let mismatch = |reason: String| Mismatch {
            line: g.line,
            n: g.n,
            reason,
        };
        match table_row(g.n, p) {
            Ok(row) => {
                if row.f.poly() != &g.f {
                    mismatches.push(mismatch(format!("f: computed {} but recorded {}", row.f, g.f)));
                }
                if row.g.poly() != &g.g {
                    mismatches.push(mismatch(format!("g: computed {} but recorded {}", row.g, g.g)));
                }
                rows.push(row);
            }
            Err(e) => mismatches.push(mismatch(e.to_string())),
        }
    }
    Some(TableCheck { rows, mismatches })
}
