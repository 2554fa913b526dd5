//! Rank profile, subpermutation and a `QU_n` representative of a matrix.

use belitskii::coset::{rank_profile, reduce_to_coset_rep};
use belitskii::{Field, SetPartition, SquareMatrix};

fn main() -> belitskii::Result<()> {
    let a = SquareMatrix::from_i64_rows(
        Field::Rational,
        &[
            &[0, 2, 1, 0, 5],
            &[0, 0, 3, 1, 0],
            &[0, 0, 0, 0, 4],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0],
        ],
    )?;
    let profile = rank_profile(&a);
    let (rep, q, log) = reduce_to_coset_rep(&a)?;
    println!("second difference: {:?}", profile.second_difference()?);
    println!("partition: {}", SetPartition::from_subpermutation(&q));
    println!("factors: {}", log.factors().len());
    print!("{rep}");
    Ok(())
}
