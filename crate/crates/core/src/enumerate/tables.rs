//! Published lists of indecomposable canonical graph types for `n <= 8`.

use std::collections::BTreeSet;
use std::fmt;

use super::enumerate_bforms;
use crate::error::{Error, Result};
use crate::graph::GraphType;

const TABLES: [&str; 8] = [
    include_str!("../../tables/n1.txt"),
    include_str!("../../tables/n2.txt"),
    include_str!("../../tables/n3.txt"),
    include_str!("../../tables/n4.txt"),
    include_str!("../../tables/n5.txt"),
    include_str!("../../tables/n6.txt"),
    include_str!("../../tables/n7.txt"),
    include_str!("../../tables/n8.txt"),
];

/// Largest `n` with a bundled table.
pub const MAX_TABLE_N: usize = TABLES.len();

/// Parses a table: one graph type per line, blank and `#` lines ignored.
pub fn parse_table(text: &str) -> Result<Vec<GraphType>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// The bundled table for `n`.
pub fn bundled_table(n: usize) -> Result<Vec<GraphType>> {
    match n.checked_sub(1).and_then(|k| TABLES.get(k)) {
        Some(text) => parse_table(text),
        None => Err(Error::OutOfRange(format!("no bundled table for n = {n}"))),
    }
}

/// Difference between enumerated forms and a table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableDiff {
    pub n: usize,
    pub enumerated: usize,
    pub listed: usize,
    /// Listed but not enumerated.
    pub missing: Vec<GraphType>,
    /// Enumerated but not listed.
    pub unexpected: Vec<GraphType>,
    /// Lines that appear more than once in the table.
    pub duplicates: Vec<GraphType>,
}

impl TableDiff {
    pub fn is_match(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty() && self.duplicates.is_empty()
    }
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} enumerated={} listed={} {}",
            self.n,
            self.enumerated,
            self.listed,
            if self.is_match() { "match" } else { "MISMATCH" }
        )?;
        for t in &self.missing {
            writeln!(f, "- {t}")?;
        }
        for t in &self.unexpected {
            writeln!(f, "+ {t}")?;
        }
        for t in &self.duplicates {
            writeln!(f, "= {t}")?;
        }
        Ok(())
    }
}

/// Compares two lists of graph types as sets.
pub fn diff_tables(n: usize, enumerated: &[GraphType], listed: &[GraphType]) -> TableDiff {
    let ours: BTreeSet<&GraphType> = enumerated.iter().collect();
    let mut theirs = BTreeSet::new();
    let mut duplicates = Vec::new();
    for t in listed {
        if !theirs.insert(t) {
            duplicates.push(t.clone());
        }
    }
    TableDiff {
        n,
        enumerated: enumerated.len(),
        listed: listed.len(),
        missing: theirs.difference(&ours).map(|t| (*t).clone()).collect(),
        unexpected: ours.difference(&theirs).map(|t| (*t).clone()).collect(),
        duplicates,
    }
}

/// Enumerates the indecomposable forms for `n` and compares them with the
/// bundled table.
pub fn verify_against_table(n: usize, jobs: usize) -> Result<TableDiff> {
    let listed = bundled_table(n)?;
    let report = enumerate_bforms(n, true, jobs)?;
    Ok(diff_tables(n, &report.forms, &listed))
}
