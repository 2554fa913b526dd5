//! Building canonical types from smaller ones, and a 3-nilpotent family
//! with many parameters.

use crate::canon::mark_parameters;
use crate::coset::Subpermutation;
use crate::error::{Error, Result};
use crate::graph::{belitskii_cmp, GraphType, SetPartition};

/// Glues `t1` (on `[p]`) and `t2` (shifted to `p+1..=p+q`) with `cross`
/// arcs from chain ends of `t1` to chain starts of the shifted `t2`, each
/// vertex on at most one cross arc. Parameter marks are recomputed.
pub fn combine(t1: &GraphType, t2: &GraphType, cross: &[(usize, usize)]) -> Result<GraphType> {
    let (p, q) = (t1.dim(), t2.dim());
    let (q1, q2) = (t1.subpermutation(), t2.subpermutation());
    let mut pairs = q1.pairs();
    pairs.extend(q2.pairs().into_iter().map(|(i, j)| (i + p, j + p)));
    let mut used_from = vec![false; p + 1];
    let mut used_to = vec![false; q + 1];
    for &(h, t) in cross {
        if !(1..=p).contains(&h) || q1.succ(h).is_some() {
            return Err(Error::InvalidCross(format!("{h} is not a chain end of the first type")));
        }
        if t <= p || t > p + q || q2.pred(t - p).is_some() {
            return Err(Error::InvalidCross(format!("{t} is not a shifted chain start of the second type")));
        }
        if std::mem::replace(&mut used_from[h], true) || std::mem::replace(&mut used_to[t - p], true) {
            return Err(Error::InvalidCross(format!("vertex of ({h},{t}) is on two cross arcs")));
        }
        pairs.push((h, t));
    }
    let sub = Subpermutation::new(p + q, &pairs)?;
    let mut extras = t1.extra_positions();
    extras.extend(t2.extra_positions().into_iter().map(|(i, j)| (i + p, j + p)));
    Ok(mark_parameters(&GraphType::from_subpermutation(&sub, &extras)?))
}

/// Every partial matching from chain ends of `t1` to shifted chain starts
/// of `t2`, in lexicographic order of the arc lists (the empty one first).
pub fn cross_sets(t1: &GraphType, t2: &GraphType) -> Vec<Vec<(usize, usize)>> {
    let p = t1.dim();
    let ends: Vec<usize> = (1..=p).filter(|&h| t1.subpermutation().succ(h).is_none()).collect();
    let starts: Vec<usize> = (1..=t2.dim())
        .filter(|&t| t2.subpermutation().pred(t).is_none())
        .map(|t| t + p)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut taken = vec![false; starts.len()];
    fn go(
        k: usize,
        ends: &[usize],
        starts: &[usize],
        taken: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if k == ends.len() {
            out.push(current.clone());
            return;
        }
        go(k + 1, ends, starts, taken, current, out);
        for s in 0..starts.len() {
            if !taken[s] {
                taken[s] = true;
                current.push((ends[k], starts[s]));
                go(k + 1, ends, starts, taken, current, out);
                current.pop();
                taken[s] = false;
            }
        }
    }
    go(0, &ends, &starts, &mut taken, &mut current, &mut out);
    out.sort();
    out
}

/// All combinations of `t1` and `t2` over [`cross_sets`], optionally only
/// the connected ones.
pub fn combine_census(t1: &GraphType, t2: &GraphType, indecomposable_only: bool) -> Result<Vec<GraphType>> {
    let mut out = Vec::new();
    for cross in cross_sets(t1, t2) {
        let t = combine(t1, t2, &cross)?;
        if !indecomposable_only || t.is_connected() {
            out.push(t);
        }
    }
    Ok(out)
}

/// Largest `r` accepted by [`construct_3nilpotent`]: with
/// `k = ⌊(n-2)/3⌋`, `k(k-1)/2`, less one when `n ≡ 1 (mod 3)`.
pub fn max_3nilpotent_parameters(n: usize) -> Option<usize> {
    if n < 6 {
        return None;
    }
    let k = (n - 2) / 3;
    let bound = k * (k.saturating_sub(1)) / 2;
    if n % 3 == 1 {
        bound.checked_sub(1)
    } else {
        Some(bound)
    }
}

/// A connected canonical type on `[n]` with exactly `r` parameters whose
/// realizations are 3-nilpotent of nilpotency index 3.
///
/// With `m = ⌈n/3⌉`, the chains are `i, 2m+1-i, 2m+i` for `i ∈ [m]` and the
/// extra arcs are `(i, j)` with `2 ≤ i ≤ m`, `2m+2-i ≤ j ≤ 2m`. For
/// `n = 3m-1` the vertex `3m` is dropped; for `n = 3m-2` also `3m-1` and
/// the arc `(m, m+2)`. Fewer parameters come from dropping extra arcs in
/// reverse Belitskiĭ order, skipping those whose removal disconnects.
pub fn construct_3nilpotent(n: usize, r: usize) -> Result<GraphType> {
    let bound = max_3nilpotent_parameters(n)
        .ok_or_else(|| Error::OutOfRange(format!("no 3-nilpotent family for n = {n}")))?;
    if r > bound {
        return Err(Error::OutOfRange(format!("r = {r} exceeds {bound} for n = {n}")));
    }
    let m = n.div_ceil(3);
    let blocks: Vec<Vec<usize>> = (1..=m)
        .map(|i| [i, 2 * m + 1 - i, 2 * m + i].into_iter().filter(|&v| v <= n).collect())
        .collect();
    let mut extras: Vec<(usize, usize)> = (2..=m)
        .flat_map(|i| (2 * m + 2 - i..=2 * m).map(move |j| (i, j)))
        .filter(|&arc| !(n == 3 * m - 2 && arc == (m, m + 2)))
        .collect();
    extras.sort_by(|a, b| belitskii_cmp(*a, *b));
    let partition = SetPartition::new(blocks)?;
    let mut t = GraphType::unmarked(partition.clone(), &extras)?;
    let mut idx = extras.len();
    while t.parameter_count() > r {
        let Some(k) = idx.checked_sub(1) else {
            return Err(Error::Internal(format!("cannot reach {r} parameters for n = {n}")));
        };
        idx = k;
        let mut fewer = extras.clone();
        fewer.remove(k);
        let candidate = GraphType::unmarked(partition.clone(), &fewer)?;
        if candidate.is_connected() {
            extras = fewer;
            t = candidate;
        }
    }
    Ok(mark_parameters(&t))
}
