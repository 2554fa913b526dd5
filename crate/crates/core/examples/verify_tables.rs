//! Enumerates indecomposable canonical graph types and compares them with
//! the bundled tables: `cargo run --release --example verify_tables -- 8`.

use belitskii::enumerate::verify_against_table;

fn main() -> belitskii::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 1..=max {
        print!("{}", verify_against_table(n, 0)?);
    }
    Ok(())
}
