//! Splitting an upper-triangular matrix into blocks by diagonal value.

use belitskii::coset::split_upper_triangular;
use belitskii::{Field, SquareMatrix};

fn main() -> belitskii::Result<()> {
    let a = SquareMatrix::from_i64_rows(
        Field::Rational,
        &[&[1, 4, 2, 7], &[0, 2, 1, 3], &[0, 0, 1, 5], &[0, 0, 0, 2]],
    )?;
    let split = split_upper_triangular(&a)?;
    print!("{}", split.decoupled);
    for block in &split.blocks {
        println!("eigenvalue {} on {:?}", block.eigenvalue, block.positions);
        print!("{}", block.nilpotent);
    }
    Ok(())
}
