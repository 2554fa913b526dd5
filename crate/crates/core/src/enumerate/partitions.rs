//! Set partitions of `[n]` via restricted growth strings.

use crate::error::{Error, Result};
use crate::graph::SetPartition;

/// Largest `n` accepted by [`set_partitions`].
pub const MAX_PARTITION_N: usize = 14;

/// Lazily yields every partition of `[n]`, blocks ordered by minimum.
///
/// The order is lexicographic in the restricted growth string `a`, where
/// `a[k]` is the block of element `k + 1`.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    growth: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions { growth: vec![0; n], done: n == 0 }
    }

    fn current(&self) -> SetPartition {
        let blocks = self.growth.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); blocks];
        for (k, &b) in self.growth.iter().enumerate() {
            out[b].push(k + 1);
        }
        SetPartition::new(out).expect("growth strings give partitions")
    }

    fn advance(&mut self) {
        let n = self.growth.len();
        for k in (1..n).rev() {
            let bound = self.growth[..k].iter().copied().max().unwrap_or(0) + 1;
            if self.growth[k] < bound {
                self.growth[k] += 1;
                for v in &mut self.growth[k + 1..] {
                    *v = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

/// All partitions of `[n]` for `1 <= n <= 14`.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::OutOfRange(format!("n = {n} not in 1..={MAX_PARTITION_N}")));
    }
    Ok(SetPartitions::new(n).collect())
}

/// Bell numbers by the Bell triangle, independent of the generator above.
pub fn bell_number(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for v in &row {
            let last = *next.last().expect("nonempty");
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}
