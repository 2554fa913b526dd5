//! Positions that may carry an extra arc in a canonical form.

use crate::coset::Subpermutation;
use crate::graph::belitskii_cmp;

/// Whether `(i, j)` may be an extra arc of a canonical form in `QU_n`:
/// `i ∈ I` with `i⁺ < j`, and either `j` is a chain tail but not a head,
/// or `j` is neither and `j⁻ < i`.
pub fn is_allowed_arc(q: &Subpermutation, i: usize, j: usize) -> bool {
    let Some(ip) = q.succ(i) else {
        return false;
    };
    if ip >= j || q.is_head(j) {
        return false;
    }
    match q.pred(j) {
        None => true,
        Some(jm) => jm < i,
    }
}

/// Whether the long-chain condition rules out `(i, j)` in any matrix whose
/// extra arcs lie in `extras`.
///
/// With `i_0 = i`, `j_0 = j`, the chains `i_p = i_{p-1}⁺` and
/// `j_p = j_{p-1}⁺` must satisfy: `i_p` has no in-arc besides the chain arc,
/// `j_{p-1}` has no out-arc besides the chain arc, `i_p < j_{p-1}`; the arc
/// is deletable once some `j_m` has no successor while `i_m⁺ < j_m`, so
/// that the arc `(i_m, j_m)` it is pushed to is forbidden outright.
pub fn long_chain_deletable(q: &Subpermutation, extras: &[(usize, usize)], i: usize, j: usize) -> bool {
    let (mut ip, mut jp) = (i, j);
    loop {
        let (Some(next_i), Some(next_j)) = (q.succ(ip), q.succ(jp)) else {
            return false;
        };
        let other_in = extras.iter().any(|&(_, b)| b == next_i);
        let other_out = extras.iter().any(|&(a, _)| a == jp);
        if other_in || other_out || next_i >= jp {
            return false;
        }
        if q.succ(next_j).is_none() && q.succ(next_i).is_some_and(|s| s < next_j) {
            return true;
        }
        ip = next_i;
        jp = next_j;
    }
}

/// Allowed extra arcs, pruned by the long-chain condition until stable, in
/// Belitskiĭ order.
pub fn candidate_extra_arcs(q: &Subpermutation) -> Vec<(usize, usize)> {
    let n = q.dim();
    let mut out: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| is_allowed_arc(q, i, j))
        .collect();
    loop {
        let keep: Vec<(usize, usize)> = out
            .iter()
            .copied()
            .filter(|&(i, j)| !long_chain_deletable(q, &out, i, j))
            .collect();
        if keep.len() == out.len() {
            break;
        }
        out = keep;
    }
    out.sort_by(|a, b| belitskii_cmp(*a, *b));
    out
}
