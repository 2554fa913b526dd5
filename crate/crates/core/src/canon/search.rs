//! Depth-first search for ESO sequences that remove one extra arc.
//!
//! The question for a target position `t`: given the arcs of `Q` and the
//! kept extra arcs before `t`, is there a sequence of stabilizing ESOs after
//! which every other position up to `t` is zero? Positions after `t` are
//! free. Each ESO only writes to positions later than the arc it reads, so
//! arcs after `t` never influence the prefix and the search state can be
//! cut at `t`.
//!
//! Every step kills the currently smallest offending arc, trying
//! predecessor moves `O_{i,q}` before successor moves `O_{p,j}`.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use crate::arith::{Scalar, SquareMatrix};
use crate::coset::Subpermutation;
use crate::graph::{apply_eso_in_place, in_stabilizer, position_count, position_of, rank_of, ArcSet, EsoMove};

/// Position tables for one dimension and subpermutation.
#[derive(Clone, Debug)]
pub(crate) struct Grid {
    n: usize,
    /// `pos[r] = (i, j)`.
    pos: Vec<(usize, usize)>,
    /// `rank[i][j]`, valid for `i < j`.
    rank: Vec<Vec<usize>>,
    /// `stab[p][r]`: whether `O_{p,r}` stabilizes `QU_n`.
    stab: Vec<Vec<bool>>,
    q_arcs: ArcSet,
}

impl Grid {
    pub(crate) fn new(q: &Subpermutation) -> Self {
        let n = q.dim();
        let pos = (0..position_count(n)).map(|r| position_of(n, r)).collect();
        let mut rank = vec![vec![usize::MAX; n + 1]; n + 1];
        let mut stab = vec![vec![false; n + 1]; n + 1];
        for i in 1..=n {
            for j in i + 1..=n {
                rank[i][j] = rank_of(n, i, j);
                stab[i][j] = in_stabilizer(q, i, j);
            }
        }
        let q_arcs = ArcSet::from_ranks(q.pairs().into_iter().map(|(i, j)| rank[i][j]));
        Grid { n, pos, rank, stab, q_arcs }
    }

    pub(crate) fn dim(&self) -> usize {
        self.n
    }

    pub(crate) fn rank(&self, i: usize, j: usize) -> usize {
        self.rank[i][j]
    }

    pub(crate) fn pos(&self, r: usize) -> (usize, usize) {
        self.pos[r]
    }

    /// Stabilizing moves that kill the arc at `target` given the arc set
    /// `arcs`, predecessor moves first.
    fn moves(&self, arcs: &ArcSet, target: usize) -> Vec<(usize, usize)> {
        let (a, b) = self.pos[target];
        let mut out = Vec::new();
        for k in a + 1..b {
            if self.stab[a][k] && arcs.contains(self.rank[k][b]) {
                out.push((a, k));
            }
        }
        for k in a + 1..b {
            if self.stab[k][b] && arcs.contains(self.rank[a][k]) {
                out.push((k, b));
            }
        }
        out
    }

    /// Generic effect of `O_{p,q}` killing `target`, cut at rank `limit`.
    fn apply_generic(&self, arcs: &ArcSet, (p, q): (usize, usize), target: usize, limit: usize) -> ArcSet {
        let mut out = *arcs;
        out.remove(target);
        for r in arcs.iter() {
            let (i, j) = self.pos[r];
            let touched = if j == p {
                self.rank[i][q]
            } else if i == q {
                self.rank[p][j]
            } else {
                continue;
            };
            if touched != target && touched <= limit {
                out.insert(touched);
            }
        }
        out
    }
}

/// A generic-weight move: `O_{p,q}` aimed at the arc at `target`.
pub(crate) type GenericStep = ((usize, usize), usize);

/// Searches for a generic ESO sequence removing the arc at rank `target`
/// while keeping `kept` (ranks below `target`).
pub(crate) fn generic_removal(grid: &Grid, kept: &ArcSet, target: usize) -> Option<Vec<GenericStep>> {
    let fixed = grid.q_arcs.union(kept).truncated(target);
    let start = ArcSet::from_ranks([target]);
    let mut parent: HashMap<ArcSet, Option<(ArcSet, GenericStep)>> = HashMap::new();
    parent.insert(start, None);
    let mut stack = vec![start];
    while let Some(bad) = stack.pop() {
        let Some(victim) = bad.first() else {
            let mut path = Vec::new();
            let mut cur = bad;
            while let Some(Some((prev, step))) = parent.get(&cur) {
                path.push(*step);
                cur = *prev;
            }
            path.reverse();
            return Some(path);
        };
        let arcs = fixed.union(&bad);
        let mut children = Vec::new();
        for mv in grid.moves(&arcs, victim) {
            let next = grid
                .apply_generic(&arcs, mv, victim, target)
                .difference(&fixed);
            if let Entry::Vacant(slot) = parent.entry(next) {
                slot.insert(Some((bad, (mv, victim))));
                children.push(next);
            }
        }
        stack.extend(children.into_iter().rev());
    }
    None
}

/// Whether the arc at `target` is removable given the kept prefix.
pub(crate) fn is_removable(grid: &Grid, kept: &ArcSet, target: usize) -> bool {
    generic_removal(grid, kept, target).is_some()
}

/// Support of `m` restricted to ranks `<= limit`.
pub(crate) fn support_upto(grid: &Grid, m: &SquareMatrix, limit: usize) -> ArcSet {
    ArcSet::from_ranks((0..=limit).filter(|&r| {
        let (i, j) = grid.pos[r];
        !m.is_zero_at(i - 1, j - 1)
    }))
}

/// The concrete counterpart of [`generic_removal`]: states are matrices,
/// moves use the actual weights, and states are deduplicated by their
/// support up to `target`. Returns the moves and the resulting matrix.
pub(crate) fn concrete_removal(
    grid: &Grid,
    m: &SquareMatrix,
    kept: &ArcSet,
    target: usize,
) -> Option<(Vec<EsoMove>, SquareMatrix)> {
    let fixed = grid.q_arcs.union(kept).truncated(target);
    let mut seen: HashSet<ArcSet> = HashSet::new();
    let mut stack: Vec<(SquareMatrix, Vec<EsoMove>)> = vec![(m.clone(), Vec::new())];
    seen.insert(support_upto(grid, m, target));
    while let Some((cur, path)) = stack.pop() {
        let support = support_upto(grid, &cur, target);
        let bad = support.difference(&fixed);
        let Some(victim) = bad.first() else {
            return Some((path, cur));
        };
        let (a, b) = grid.pos[victim];
        let w = cur.get(a - 1, b - 1).clone();
        let mut children = Vec::new();
        for (p, q) in grid.moves(&support, victim) {
            let lambda: Scalar = if p == a {
                -&w.checked_div(cur.get(q - 1, b - 1)).expect("source arc is nonzero")
            } else {
                w.checked_div(cur.get(a - 1, p - 1)).expect("source arc is nonzero")
            };
            let mut next = cur.clone();
            apply_eso_in_place(&mut next, p, q, &lambda);
            debug_assert!(next.is_zero_at(a - 1, b - 1));
            if seen.insert(support_upto(grid, &next, target)) {
                let mut next_path = path.clone();
                next_path.push(EsoMove { p, q, lambda, target: Some((a, b)) });
                children.push((next, next_path));
            }
        }
        stack.extend(children.into_iter().rev());
    }
    None
}
