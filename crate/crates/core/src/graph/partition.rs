//! Set partitions of `[n]` and their correspondence with subpermutations:
//! consecutive elements of a block are exactly the pairs `(i, σ(i))`.

use std::fmt;
use std::str::FromStr;

use crate::coset::Subpermutation;
use crate::error::{Error, Result};

/// A partition of `[n]` into ascending blocks, ordered by block minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and normalizes the block order.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "blocks do not partition 1..={n}"
                    )));
                }
                seen[v] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn to_subpermutation(&self) -> Subpermutation {
        let pairs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        Subpermutation::new(self.n, &pairs).expect("blocks are ascending and disjoint")
    }

    /// Blocks are the maximal chains of `q`.
    pub fn from_subpermutation(q: &Subpermutation) -> Self {
        let n = q.dim();
        let blocks = (1..=n)
            .filter(|&v| q.is_tail(v))
            .map(|tail| {
                let mut block = vec![tail];
                while let Some(s) = q.succ(*block.last().expect("nonempty")) {
                    block.push(s);
                }
                block
            })
            .collect();
        SetPartition { n, blocks }
    }
}

impl From<&Subpermutation> for SetPartition {
    fn from(q: &Subpermutation) -> Self {
        SetPartition::from_subpermutation(q)
    }
}

impl From<&SetPartition> for Subpermutation {
    fn from(p: &SetPartition) -> Self {
        p.to_subpermutation()
    }
}

/// Writes `v` as a label: bare digits up to 9, otherwise space separated.
pub(crate) fn join_labels(n: usize, labels: &[usize]) -> String {
    let parts: Vec<String> = labels.iter().map(usize::to_string).collect();
    parts.join(if n > 9 { " " } else { "" })
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| join_labels(self.n, b)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Splits one label group: numbers separated by spaces, or single digits.
pub(crate) fn split_labels(token: &str, spaced: bool) -> Result<Vec<usize>> {
    let bad = || Error::InvalidPartition(format!("bad block `{token}`"));
    if spaced {
        token
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad()))
            .collect()
    } else {
        token
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `124|37|56`, or `1 2 10|3 ...` when labels exceed 9.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split('|').map(str::trim).collect();
        if tokens.iter().any(|t| t.is_empty()) {
            return Err(Error::InvalidPartition(format!("empty block in `{s}`")));
        }
        let spaced = tokens.iter().any(|t| t.contains(char::is_whitespace));
        let parse = |spaced| -> Result<SetPartition> {
            let blocks = tokens
                .iter()
                .map(|t| split_labels(t, spaced))
                .collect::<Result<Vec<_>>>()?;
            SetPartition::new(blocks)
        };
        match parse(spaced) {
            Ok(p) => Ok(p),
            Err(e) if spaced => Err(e),
            Err(e) => parse(true).map_err(|_| e),
        }
    }
}
