//! Parameter placement and diagonal normalization.

use std::collections::{HashSet, VecDeque};

use crate::arith::{Scalar, SquareMatrix};
use crate::error::{Error, Result};
use crate::graph::{GraphType, UnionFind};

/// Marks the extra arcs that close an undirected cycle of unmarked arcs,
/// adding arcs to the graph of `Q` in Belitskiĭ order.
pub fn mark_parameters(t: &GraphType) -> GraphType {
    let mut uf = UnionFind::new(t.dim() + 1);
    for (i, j) in t.subpermutation().pairs() {
        uf.union(i, j);
    }
    let marked: Vec<bool> = t.arcs().iter().map(|a| !uf.union(a.i, a.j)).collect();
    let mut k = 0;
    t.with_marks(|_| {
        k += 1;
        marked[k - 1]
    })
}

/// Result of [`dn_normalize`]: `matrix = D·Ã·D⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub matrix: SquareMatrix,
    /// Values on the marked arcs, in Belitskiĭ order.
    pub params: Vec<((usize, usize), Scalar)>,
    pub diagonal: Vec<Scalar>,
}

/// Finds `D` making every unmarked arc of `Ã` weigh 1.
///
/// Each component is rooted at its smallest vertex with `d = 1`, and `d`
/// spreads breadth-first over unmarked arcs in both directions.
pub fn dn_normalize(a: &SquareMatrix, t: &GraphType) -> Result<Normalized> {
    let n = a.dim();
    let field = a.field();
    let expected: HashSet<(usize, usize)> = t.all_arcs().into_iter().collect();
    for i in 1..=n {
        for j in i + 1..=n {
            if expected.contains(&(i, j)) == a.is_zero_at(i - 1, j - 1) {
                return Err(Error::Internal(format!(
                    "arc set of the matrix differs from `{t}` at ({i},{j})"
                )));
            }
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    let marked = t.marked_positions();
    for (i, j) in t.all_arcs() {
        if !marked.contains(&(i, j)) {
            adj[i].push((i, j));
            adj[j].push((i, j));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut d: Vec<Option<Scalar>> = vec![None; n + 1];
    for root in 1..=n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(field.one());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let dv = d[v].clone().expect("visited");
            for &(i, j) in &adj[v] {
                let w = a.get(i - 1, j - 1);
                let (other, value) = if i == v {
                    (j, &dv * w)
                } else {
                    (i, dv.checked_div(w).expect("arc weight is nonzero"))
                };
                match &d[other] {
                    None => {
                        d[other] = Some(value);
                        queue.push_back(other);
                    }
                    Some(existing) if *existing == value => {}
                    Some(_) => {
                        return Err(Error::Internal(format!(
                            "unmarked cycle through ({i},{j}) in `{t}`"
                        )))
                    }
                }
            }
        }
    }
    let diagonal: Vec<Scalar> = d.into_iter().skip(1).map(|v| v.expect("all rooted")).collect();
    let mut matrix = a.clone();
    for i in 1..=n {
        for j in i + 1..=n {
            if !a.is_zero_at(i - 1, j - 1) {
                let v = (&diagonal[i - 1] * a.get(i - 1, j - 1))
                    .checked_div(&diagonal[j - 1])
                    .expect("diagonal is nonzero");
                matrix.set(i - 1, j - 1, v);
            }
        }
    }
    let params = marked
        .into_iter()
        .map(|(i, j)| ((i, j), matrix.get(i - 1, j - 1).clone()))
        .collect();
    Ok(Normalized { matrix, params, diagonal })
}
