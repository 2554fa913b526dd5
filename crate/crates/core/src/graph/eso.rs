//! Elementary `U_n`-similarity operations (ESOs): conjugation by
//! `I + λE_{pq}`, in concrete and generic-weight form.

use super::digraph::WeightedDigraph;
use super::order::{position_of, rank_of, ArcSet};
use crate::arith::{Scalar, SquareMatrix};
use crate::coset::Subpermutation;
use crate::error::{Error, Result};

/// Whether conjugation by `I + λE_{pr}` maps `QU_n` into itself:
/// `r ∉ I`, or both in `I` with `σ(p) < σ(r)`.
pub fn in_stabilizer(q: &Subpermutation, p: usize, r: usize) -> bool {
    debug_assert!(p < r);
    match (q.succ(p), q.succ(r)) {
        (_, None) => true,
        (Some(sp), Some(sr)) => sp < sr,
        (None, Some(_)) => false,
    }
}

/// The index set `S_Q`, in Belitskiĭ order.
pub fn stabilizer_positions(q: &Subpermutation) -> Vec<(usize, usize)> {
    super::order::positions_in_order(q.dim())
        .into_iter()
        .filter(|&(p, r)| in_stabilizer(q, p, r))
        .collect()
}

/// One ESO `O_{p,q}^λ`, optionally recording the arc it is meant to kill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EsoMove {
    pub p: usize,
    pub q: usize,
    pub lambda: Scalar,
    pub target: Option<(usize, usize)>,
}

/// `(I + λE_{pq}) M (I + λE_{pq})⁻¹` for strictly upper `M`, in place:
/// row `p` gains `λ·row q`, column `q` loses `λ·column p`.
pub fn apply_eso_in_place(m: &mut SquareMatrix, p: usize, q: usize, lambda: &Scalar) {
    assert!(1 <= p && p < q && q <= m.dim());
    let (p, q) = (p - 1, q - 1);
    let n = m.dim();
    let row_q: Vec<Scalar> = m.row(q).to_vec();
    let col_p: Vec<Scalar> = (0..n).map(|i| m.get(i, p).clone()).collect();
    for (j, v) in row_q.iter().enumerate() {
        if !v.is_zero() {
            let nv = m.get(p, j) + &(lambda * v);
            m.set(p, j, nv);
        }
    }
    for (i, v) in col_p.iter().enumerate() {
        if !v.is_zero() {
            let nv = m.get(i, q) - &(lambda * v);
            m.set(i, q, nv);
        }
    }
}

pub fn apply_eso(m: &SquareMatrix, mv: &EsoMove) -> SquareMatrix {
    let mut out = m.clone();
    apply_eso_in_place(&mut out, mv.p, mv.q, &mv.lambda);
    out
}

/// The stabilizing ESOs that annihilate `arc` in `g`: first
/// `O_{i,q}` with `(q,j)` an arc, then `O_{p,j}` with `(i,p)` an arc.
pub fn elimination_moves(g: &WeightedDigraph, arc: (usize, usize), q: &Subpermutation) -> Vec<EsoMove> {
    let (i, j) = arc;
    let Some(a_ij) = g.weight(i, j) else {
        return Vec::new();
    };
    let mut moves = Vec::new();
    for k in i + 1..j {
        if let Some(w) = g.weight(k, j) {
            if in_stabilizer(q, i, k) {
                let lambda = -&a_ij.checked_div(w).expect("arc weights are nonzero");
                moves.push(EsoMove { p: i, q: k, lambda, target: Some(arc) });
            }
        }
    }
    for k in i + 1..j {
        if let Some(w) = g.weight(i, k) {
            if in_stabilizer(q, k, j) {
                let lambda = a_ij.checked_div(w).expect("arc weights are nonzero");
                moves.push(EsoMove { p: k, q: j, lambda, target: Some(arc) });
            }
        }
    }
    moves
}

/// Generic-weight effect of `O_{p,q}` chosen to kill `target`: the target
/// disappears and every other touched position becomes an arc.
pub fn generic_eso(n: usize, arcs: &ArcSet, p: usize, q: usize, target: (usize, usize)) -> Result<ArcSet> {
    let has = |i: usize, j: usize| arcs.contains(rank_of(n, i, j));
    let (a, b) = target;
    let designed = has(a, b)
        && ((p == a && q < b && has(q, b)) || (q == b && a < p && has(a, p)));
    if !designed {
        return Err(Error::NotAnnihilable(format!(
            "O_{{{p},{q}}} cannot remove ({a},{b})"
        )));
    }
    let mut out = *arcs;
    let t = rank_of(n, a, b);
    out.remove(t);
    for r in arcs.iter() {
        let (i, j) = position_of(n, r);
        let touched = if j == p {
            Some((i, q))
        } else if i == q {
            Some((p, j))
        } else {
            None
        };
        if let Some((x, y)) = touched {
            let tr = rank_of(n, x, y);
            if tr != t {
                out.insert(tr);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::graph::digraph::graph_of;
    use crate::graph::SetPartition;

    fn arcs(n: usize, list: &[(usize, usize)]) -> ArcSet {
        ArcSet::from_ranks(list.iter().map(|&(i, j)| rank_of(n, i, j)))
    }

    fn example() -> (Subpermutation, SquareMatrix) {
        let f = Field::Rational;
        let q = "124|37|56".parse::<SetPartition>().unwrap().to_subpermutation();
        let mut a = q.to_matrix(f);
        for (i, j, v) in [(1, 4, 3), (1, 5, -2), (1, 7, 1), (2, 5, -1)] {
            a.set(i - 1, j - 1, f.from_i64(v));
        }
        (q, a)
    }

    #[test]
    fn zero_subpermutation_stabilizer_is_everything() {
        let q = Subpermutation::zero(5);
        assert_eq!(stabilizer_positions(&q).len(), 10);
    }

    #[test]
    fn stabilizer_membership() {
        let q = "123|478|56".parse::<SetPartition>().unwrap().to_subpermutation();
        assert!(!in_stabilizer(&q, 4, 5));
        assert!(in_stabilizer(&q, 5, 7));
        assert!(!in_stabilizer(&q, 6, 7));
        let q7 = "124|37|56".parse::<SetPartition>().unwrap().to_subpermutation();
        assert!(!in_stabilizer(&q7, 4, 5));
    }

    #[test]
    fn first_move_of_worked_example() {
        let (q, a) = example();
        let g = graph_of(&a);
        let moves = elimination_moves(&g, (1, 4), &q);
        let m = moves
            .iter()
            .find(|m| (m.p, m.q) == (2, 4))
            .expect("O_{2,4} is available");
        assert_eq!(m.lambda, Field::Rational.from_i64(3));
        let b = apply_eso(&a, m);
        assert!(b.is_zero_at(0, 3));
        for (i, j) in q.pairs() {
            assert!(b.get(i - 1, j - 1).is_one());
        }
        assert!(elimination_moves(&g, (2, 5), &q).is_empty());
    }

    #[test]
    fn zero_lambda_is_identity() {
        let (_, a) = example();
        let zero = Field::Rational.zero();
        let mv = EsoMove { p: 2, q: 5, lambda: zero, target: None };
        assert_eq!(apply_eso(&a, &mv), a);
    }

    #[test]
    fn generic_examples() {
        let n = 7;
        let base = [(1, 2), (2, 4), (3, 7), (5, 6), (2, 5), (1, 5), (1, 7)];
        let out = generic_eso(n, &arcs(n, &base), 2, 5, (1, 5)).unwrap();
        let expect = [(1, 2), (2, 4), (3, 7), (5, 6), (2, 5), (1, 7), (2, 6)];
        assert_eq!(out, arcs(n, &expect));
        assert!(generic_eso(n, &arcs(n, &base), 3, 5, (1, 5)).is_err());

        let n = 8;
        let base = [(1, 2), (2, 3), (4, 7), (7, 8), (5, 6), (5, 7), (2, 4), (2, 5), (1, 5)];
        let out = generic_eso(n, &arcs(n, &base), 2, 5, (1, 5)).unwrap();
        let added = out.difference(&arcs(n, &base));
        assert_eq!(added, arcs(n, &[(2, 6), (2, 7)]));
        assert!(!out.contains(rank_of(n, 1, 5)));
    }
}
