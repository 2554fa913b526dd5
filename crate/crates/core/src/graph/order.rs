//! The Belitskiĭ order on strictly upper positions and bitsets keyed by it.

use std::cmp::Ordering;
use std::fmt;

/// `(i, j) ≺ (i', j')` iff `i > i'`, or `i = i'` and `j < j'`.
pub fn belitskii_cmp(a: (usize, usize), b: (usize, usize)) -> Ordering {
    b.0.cmp(&a.0).then(a.1.cmp(&b.1))
}

/// 0-based index of the strictly upper position `(i, j)` in Belitskiĭ order.
pub fn rank_of(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n, "({i},{j}) not strictly upper in {n}");
    (n - i) * (n - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`rank_of`].
pub fn position_of(n: usize, rank: usize) -> (usize, usize) {
    let mut start = 0;
    for i in (1..n).rev() {
        let width = n - i;
        if rank < start + width {
            return (i, i + 1 + rank - start);
        }
        start += width;
    }
    panic!("rank {rank} out of range for dimension {n}")
}

/// Number of strictly upper positions.
pub fn position_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All strictly upper positions, in Belitskiĭ order.
pub fn positions_in_order(n: usize) -> Vec<(usize, usize)> {
    (0..position_count(n)).map(|r| position_of(n, r)).collect()
}

const WORDS: usize = 8;

/// A set of strictly upper positions, stored as a bitset over Belitskiĭ
/// ranks. Covers every dimension up to 32.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcSet([u64; WORDS]);

impl ArcSet {
    pub fn new() -> Self {
        ArcSet::default()
    }

    pub fn from_ranks(ranks: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ArcSet::new();
        for r in ranks {
            s.insert(r);
        }
        s
    }

    pub fn contains(&self, rank: usize) -> bool {
        self.0[rank / 64] >> (rank % 64) & 1 == 1
    }

    /// Returns whether the rank was newly inserted.
    pub fn insert(&mut self, rank: usize) -> bool {
        let fresh = !self.contains(rank);
        self.0[rank / 64] |= 1 << (rank % 64);
        fresh
    }

    /// Returns whether the rank was present.
    pub fn remove(&mut self, rank: usize) -> bool {
        let had = self.contains(rank);
        self.0[rank / 64] &= !(1 << (rank % 64));
        had
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    /// Keeps only ranks `<= max`.
    pub fn truncated(&self, max: usize) -> ArcSet {
        let mut out = *self;
        let word = max / 64;
        let bit = max % 64;
        if bit < 63 {
            out.0[word] &= (1u64 << (bit + 1)) - 1;
        }
        for w in out.0.iter_mut().skip(word + 1) {
            *w = 0;
        }
        out
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &ArcSet) -> ArcSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Ranks in increasing (Belitskiĭ) order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        let n = 6;
        assert_eq!(belitskii_cmp((n - 1, n), (n - 2, n - 1)), Ordering::Less);
        assert_eq!(belitskii_cmp((n - 2, n - 1), (n - 2, n)), Ordering::Less);
        assert_eq!(belitskii_cmp((2, 5), (2, 5)), Ordering::Equal);
    }

    #[test]
    fn ranks_follow_the_order() {
        for n in 2..=12 {
            let pos = positions_in_order(n);
            assert_eq!(pos.len(), position_count(n));
            for (r, &(i, j)) in pos.iter().enumerate() {
                assert_eq!(rank_of(n, i, j), r);
            }
            for w in pos.windows(2) {
                assert_eq!(belitskii_cmp(w[0], w[1]), Ordering::Less);
            }
        }
    }

    #[test]
    fn arcset_basics() {
        let mut s = ArcSet::from_ranks([3, 70, 200]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70, 200]);
        assert_eq!(s.truncated(70).iter().collect::<Vec<_>>(), vec![3, 70]);
        assert_eq!(s.truncated(63).iter().collect::<Vec<_>>(), vec![3]);
        assert!(s.remove(3) && !s.remove(3));
        assert!(s.insert(495) && !s.insert(495));
        assert!(ArcSet::from_ranks([70]).is_subset(&s));
    }
}
