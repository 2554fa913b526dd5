//! Brute-force `B_n`-orbits over small prime fields, checked against the
//! canonizer: `cargo run --release --example orbit_check -- 3 4`.

use belitskii::oracle::{bn_orbits_bruteforce, check_canon_consistency};
use belitskii::Field;

fn main() -> belitskii::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let max_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let field = Field::prime(p)?;
    for n in 1..=max_n {
        let table = bn_orbits_bruteforce(field, n)?;
        let report = check_canon_consistency(&table);
        print!("GF({p}) n={n}: {report}");
    }
    Ok(())
}
