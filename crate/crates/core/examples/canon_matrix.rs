//! Canonical form of the 7×7 matrix with graph type `124|37|56: 25|14|15|17`.

use belitskii::{canon, Field, SquareMatrix};

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
    let c = canon(&a)?;
    print!("{c}");
    println!("witness:");
    print!("{}", c.witness.transform());
    assert_eq!(c.witness.apply(&a)?, c.matrix);
    Ok(())
}
