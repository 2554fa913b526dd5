//! Indecomposable canonical types for one `n` (default 6).

use belitskii::enumerate::enumerate_bforms;

fn main() -> belitskii::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let report = enumerate_bforms(n, true, 0)?;
    print!("{report}");
    Ok(())
}
