//! Enumeration of canonical graph types.
//!
//! For each partition of `[n]` the candidate extra arcs are visited in
//! Belitskiĭ order. An arc that some ESO sequence removes given the arcs
//! kept so far is skipped; any other arc splits the search into a branch
//! that keeps it and one that leaves it out.

mod build;
mod candidates;
mod partitions;
mod tables;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

pub use build::{
    combine, combine_census, construct_3nilpotent, cross_sets, max_3nilpotent_parameters,
};
pub use candidates::{candidate_extra_arcs, is_allowed_arc, long_chain_deletable};
pub use partitions::{bell_number, set_partitions, SetPartitions, MAX_PARTITION_N};
pub use tables::{bundled_table, diff_tables, parse_table, verify_against_table, TableDiff, MAX_TABLE_N};

use crate::canon::mark_parameters;
use crate::canon::search::{is_removable, Grid};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, GraphType, SetPartition};

/// Memoized removability questions for one subpermutation.
struct Explorer {
    grid: Grid,
    memo: HashMap<(ArcSet, usize), bool>,
}

impl Explorer {
    fn new(p: &SetPartition) -> Self {
        Explorer {
            grid: Grid::new(&p.to_subpermutation()),
            memo: HashMap::new(),
        }
    }

    fn removable(&mut self, kept: &ArcSet, target: usize) -> bool {
        let key = (*kept, target);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = is_removable(&self.grid, kept, target);
        self.memo.insert(key, v);
        v
    }
}

/// Every canonical graph type with partition `p`, marked, in branch order
/// (keep before drop).
pub fn enumerate_for_partition(p: &SetPartition) -> Vec<GraphType> {
    let mut ex = Explorer::new(p);
    let cands: Vec<usize> = candidate_extra_arcs(&p.to_subpermutation())
        .into_iter()
        .map(|(i, j)| ex.grid.rank(i, j))
        .collect();
    let mut found = Vec::new();
    let mut stack = vec![(0usize, ArcSet::new())];
    while let Some((idx, kept)) = stack.pop() {
        if idx == cands.len() {
            found.push(kept);
            continue;
        }
        let t = cands[idx];
        if ex.removable(&kept, t) {
            stack.push((idx + 1, kept));
        } else {
            let mut with = kept;
            with.insert(t);
            stack.push((idx + 1, kept));
            stack.push((idx + 1, with));
        }
    }
    found
        .into_iter()
        .map(|kept| {
            let arcs: Vec<(usize, usize)> = kept.iter().map(|r| ex.grid.pos(r)).collect();
            mark_parameters(&GraphType::unmarked(p.clone(), &arcs).expect("candidates are allowed"))
        })
        .collect()
}

/// Whether `t` (marks included) is produced by [`enumerate_for_partition`].
pub fn is_canonical(t: &GraphType) -> bool {
    let q = t.subpermutation();
    if t.arcs().iter().any(|a| !is_allowed_arc(q, a.i, a.j)) {
        return false;
    }
    let mut ex = Explorer::new(t.partition());
    let cands = candidate_extra_arcs(q);
    let arcs = t.extra_set();
    if arcs.iter().any(|r| !cands.contains(&ex.grid.pos(r))) {
        return false;
    }
    // Replay the branch that `t` would follow.
    let mut kept = ArcSet::new();
    for (i, j) in cands {
        let r = ex.grid.rank(i, j);
        let present = arcs.contains(r);
        if ex.removable(&kept, r) {
            if present {
                return false;
            }
        } else if present {
            kept.insert(r);
        }
    }
    mark_parameters(&t.without_marks()) == *t
}

/// The outcome of [`enumerate_bforms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: usize,
    /// Sorted by partition text, then arcs.
    pub forms: Vec<GraphType>,
    pub indecomposable_only: bool,
}

impl EnumerationReport {
    pub fn form_count(&self) -> usize {
        self.forms.len()
    }

    /// Number of distinct partitions among the listed forms.
    pub fn partition_count(&self) -> usize {
        let mut parts: Vec<&SetPartition> = self.forms.iter().map(GraphType::partition).collect();
        parts.dedup();
        parts.len()
    }

    pub fn indecomposable_count(&self) -> usize {
        self.forms.iter().filter(|t| t.is_connected()).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "n={} forms={} partitions={}",
            self.n,
            self.form_count(),
            self.partition_count()
        )
    }
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.forms {
            writeln!(f, "{t}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

/// Upper bound on `n` for [`enumerate_bforms`].
pub const MAX_ENUMERATE_N: usize = 10;

/// All canonical graph types in `N_n`, optionally only connected ones.
///
/// Partitions are processed on `jobs` worker threads (`0` means the rayon
/// default); the output does not depend on `jobs`.
pub fn enumerate_bforms(n: usize, indecomposable_only: bool, jobs: usize) -> Result<EnumerationReport> {
    if n == 0 || n > MAX_ENUMERATE_N {
        return Err(Error::OutOfRange(format!("n = {n} not in 1..={MAX_ENUMERATE_N}")));
    }
    let work = |p: SetPartition| -> Vec<GraphType> {
        let mut forms = enumerate_for_partition(&p);
        if indecomposable_only {
            forms.retain(GraphType::is_connected);
        }
        forms
    };
    let mut forms: Vec<GraphType> = if jobs == 1 {
        SetPartitions::new(n).flat_map(work).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| SetPartitions::new(n).par_bridge().flat_map_iter(work).collect())
    };
    forms.sort();
    Ok(EnumerationReport { n, forms, indecomposable_only })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(p: &str) -> Vec<String> {
        enumerate_for_partition(&p.parse().unwrap())
            .iter()
            .map(|t| t.to_string())
            .collect()
    }

    #[test]
    fn example_eight_table() {
        let forms = strings("123|478|56");
        assert_eq!(
            forms,
            vec![
                "123|478|56: 57|24|_25_",
                "123|478|56: 57|24",
                "123|478|56: 57|25",
                "123|478|56: 57|15",
                "123|478|56: 57",
                "123|478|56: 24|25",
                "123|478|56: 24",
                "123|478|56: 25",
                "123|478|56: 14",
                "123|478|56: empty",
            ]
        );
    }

    #[test]
    fn small_partitions() {
        assert_eq!(strings("12|34"), vec!["12|34: 13", "12|34: empty"]);
        assert_eq!(strings("1|2|3"), vec!["1|2|3: empty"]);
    }

    #[test]
    fn canonical_checks() {
        for (s, expect) in [
            ("124|37|56: 25", true),
            ("124|37|56: 25|14", false),
            ("12368|457: 46", false),
            ("12368|457: 24", true),
            ("123|478|56: 57|24|25", false),
            ("123|478|56: 57|24|_25_", true),
        ] {
            assert_eq!(is_canonical(&s.parse().unwrap()), expect, "{s}");
        }
    }
}
