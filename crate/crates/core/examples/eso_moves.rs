//! Elementary operations that remove one extra arc, and their generic effect.

use belitskii::coset::subpermutation_of;
use belitskii::graph::{apply_eso, elimination_moves, generic_eso, graph_of, position_of};
use belitskii::{Field, SquareMatrix};

fn main() -> belitskii::Result<()> {
    let a = SquareMatrix::from_i64_rows(
        Field::Rational,
        &[
            &[0, 1, 0, 3, -2, 0, 1],
            &[0, 0, 0, 1, -1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0],
        ],
    )?;
    let q = subpermutation_of(&a)?;
    let g = graph_of(&a);
    let n = a.dim();
    for mv in elimination_moves(&g, (1, 5), &q) {
        let after = graph_of(&apply_eso(&a, &mv)).arc_set();
        let generic = generic_eso(n, &g.arc_set(), mv.p, mv.q, (1, 5))?;
        let show = |s: &belitskii::graph::ArcSet| {
            s.iter().map(|r| format!("{:?}", position_of(n, r))).collect::<Vec<_>>().join(" ")
        };
        println!("O_{},{} lambda={}", mv.p, mv.q, mv.lambda);
        println!("  concrete: {}", show(&after));
        println!("  generic:  {}", show(&generic));
    }
    Ok(())
}
