//! Diagonal similarity: same pattern, and equal `a12·a23/a13`.

use belitskii::oracle::dn_similar;
use belitskii::{Field, SquareMatrix};

fn main() -> belitskii::Result<()> {
    let f = Field::Rational;
    let a = SquareMatrix::from_i64_rows(f, &[&[0, 2, 10], &[0, 0, 5], &[0, 0, 0]])?;
    let b = SquareMatrix::from_i64_rows(f, &[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]])?;
    let c = SquareMatrix::from_i64_rows(f, &[&[0, 1, 10], &[0, 0, 1], &[0, 0, 0]])?;
    match dn_similar(&a, &b)? {
        Some(d) => print!("a ~ b via\n{d}"),
        None => println!("a ~ b: no"),
    }
    println!("a ~ c: {}", if dn_similar(&a, &c)?.is_some() { "yes" } else { "no" });
    Ok(())
}
