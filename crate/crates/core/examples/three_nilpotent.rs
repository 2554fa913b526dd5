//! 3-nilpotent canonical types with the largest parameter count, n = 6..=12.

use belitskii::enumerate::{construct_3nilpotent, max_3nilpotent_parameters};
use belitskii::Field;

fn main() -> belitskii::Result<()> {
    for n in 6..=12 {
        let Some(r) = max_3nilpotent_parameters(n) else {
            println!("n={n}: none");
            continue;
        };
        let t = construct_3nilpotent(n, r)?;
        let field = Field::Rational;
        let m = t.realize(field, &vec![field.from_i64(2); t.mark_count()])?;
        println!("n={n} r={r}: {t} (M^2 zero: {})", m.pow(2).is_zero());
    }
    Ok(())
}
