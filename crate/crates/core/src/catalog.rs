//! Group catalogs and the formula-versus-oracle sweep over them.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::kappa::{kappa_enhanced, ConnectivityReport, KappaOptions, Method, Verdict};

/// Built-in catalog: cyclic groups, non-cyclic p-groups and mixed nilpotent
/// products, all within the default oracle budget.
pub const BUILTIN_CATALOG: &[&str] = &[
    "Z1",
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z11",
    "Z12",
    "Ab(2;1,1)",
    "Ab(2;1,1,1)",
    "Ab(2;1,2)",
    "Ab(2;2,2)",
    "Ab(3;1,1)",
    "Ab(3;1,2)",
    "Ab(5;1,1)",
    "D8",
    "D16",
    "Q8",
    "Q16",
    "Q32",
    "Z2 x Q8",
    "D8 x Q8",
    "Z3 x Q8",
    "Z5 x Q8",
    "Ab(3;1,1) x Q8",
    "Q16 x Ab(3;1,1)",
    "Z4 x Ab(3;1,1)",
    "Z5 x Ab(3;1,2)",
    "D8 x Z3",
    "D8 x Ab(3;1,1)",
    "Ab(3;1,1) x Ab(2;1,1)",
    "Ab(3;1,2) x Ab(2;1,1)",
    "Ab(2;1,1) x Ab(5;1,1)",
    "Ab(2;1,1,1) x Ab(3;1,1)",
    "Ab(2;1,2) x Ab(3;1,1)",
    "Ab(2;1,1) x Ab(3;1,1) x Z5",
    "Ab(3;1,1) x Ab(5;1,1)",
    "Ab(5;1,1) x Q8",
];

pub fn builtin_catalog() -> Vec<GroupSpec> {
    BUILTIN_CATALOG
        .iter()
        .map(|s| GroupSpec::parse(s).expect("built-in catalog entries parse"))
        .collect()
}

/// One spec per line; blank lines and `#` comments are skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<GroupSpec>> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
        .map(GroupSpec::parse)
        .collect()
}

pub fn read_catalog(path: &Path) -> Result<Vec<GroupSpec>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text)
}

#[derive(Debug)]
pub struct CatalogRow {
    pub spec: String,
    pub outcome: std::result::Result<ConnectivityReport, Error>,
}

impl CatalogRow {
    /// Formula (or mr-corrected closed form) contradicts the oracle.
    pub fn disagrees(&self) -> bool {
        let Ok(report) = &self.outcome else {
            return false;
        };
        let corrected = match (report.variants.and_then(|v| v.mr_corrected), report.kappa_oracle()) {
            (Some(c), Some(o)) => c != o as u128,
            _ => false,
        };
        report.verdict == Verdict::Disagree || corrected
    }

    pub fn printed_flagged(&self) -> bool {
        matches!(&self.outcome, Ok(r) if r.printed_variant_mismatch() == Some(true))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub oracle_skipped: usize,
    pub errors: usize,
    pub printed_flagged: usize,
}

pub fn verify_catalog(entries: &[GroupSpec], budget: usize) -> Vec<CatalogRow> {
    let options = KappaOptions {
        method: Method::Both,
        budget,
    };
    entries
        .iter()
        .map(|spec| CatalogRow {
            spec: spec.to_string(),
            outcome: kappa_enhanced(spec, options),
        })
        .collect()
}

pub fn summarize(rows: &[CatalogRow]) -> CatalogSummary {
    let mut s = CatalogSummary {
        total: rows.len(),
        ..CatalogSummary::default()
    };
    for row in rows {
        if row.printed_flagged() {
            s.printed_flagged += 1;
        }
        match &row.outcome {
            Err(_) => s.errors += 1,
            Ok(_) if row.disagrees() => s.disagree += 1,
            Ok(r) if r.verdict == Verdict::Agree => s.agree += 1,
            Ok(_) => s.oracle_skipped += 1,
        }
    }
    s
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Fixed-width text table, one row per entry, followed by a summary line.
pub fn render_table(rows: &[CatalogRow]) -> String {
    let mut out = format!(
        "{:<32} {:>6} {:>8} {:>8} {:>8} {:>8}  {}\n",
        "spec", "order", "formula", "oracle", "printed", "mr-corr", "verdict"
    );
    for row in rows {
        let line = match &row.outcome {
            Ok(r) => {
                let mut verdict = r.verdict.as_str().to_string();
                if row.disagrees() && r.verdict != Verdict::Disagree {
                    verdict = "disagree".into();
                }
                if row.printed_flagged() {
                    verdict.push_str(" (printed variant differs)");
                }
                format!(
                    "{:<32} {:>6} {:>8} {:>8} {:>8} {:>8}  {}",
                    r.spec,
                    r.order,
                    cell(r.kappa_formula()),
                    cell(r.kappa_oracle()),
                    cell(r.variants.and_then(|v| v.printed)),
                    cell(r.variants.and_then(|v| v.mr_corrected)),
                    verdict
                )
            }
            Err(e) => format!("{:<32} error: {e}", row.spec),
        };
        out.push_str(&line);
        out.push('\n');
    }
    let s = summarize(rows);
    out.push_str(&format!(
        "{} groups: {} agree, {} disagree, {} oracle-skipped, {} errors, {} printed-variant mismatches\n",
        s.total, s.agree, s.disagree, s.oracle_skipped, s.errors, s.printed_flagged
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_renders_canonically() {
        let specs = builtin_catalog();
        assert_eq!(specs.len(), BUILTIN_CATALOG.len());
        for (spec, text) in specs.iter().zip(BUILTIN_CATALOG) {
            assert_eq!(spec.to_string(), *text);
        }
    }

    #[test]
    fn catalog_file_format() {
        let specs = parse_catalog("# header\nZ4\n\n  Q8  # quaternion\n").unwrap();
        assert_eq!(specs.len(), 2);
        assert!(parse_catalog("Z4\nAb(4;1,1)\n").is_err());
    }

    #[test]
    fn empty_catalog() {
        let rows = verify_catalog(&[], 600);
        assert_eq!(summarize(&rows), CatalogSummary::default());
        assert!(render_table(&rows).ends_with("0 groups: 0 agree, 0 disagree, 0 oracle-skipped, 0 errors, 0 printed-variant mismatches\n"));
    }

    #[test]
    fn printed_variant_flagged() {
        let rows = verify_catalog(&[GroupSpec::parse("Ab(3;1,1) x Ab(2;1,1)").unwrap()], 600);
        assert!(rows[0].printed_flagged());
        assert!(!rows[0].disagrees());
        let table = render_table(&rows);
        assert!(table.contains("agree (printed variant differs)"), "{table}");
    }

    #[test]
    fn budget_skips_oracle() {
        let rows = verify_catalog(&[GroupSpec::parse("Q16 x Ab(3;1,1)").unwrap()], 100);
        let s = summarize(&rows);
        assert_eq!((s.oracle_skipped, s.agree), (1, 0));
    }
}
