//! Exact scalars and dense matrices over the rationals and prime fields.

mod matrix;
mod scalar;

pub use matrix::{SquareMatrix, MAX_DIM};
pub use scalar::{Field, Residue, Scalar};

use crate::error::{Error, Result};

/// Parses the matrix text format.
///
/// ```text
/// field=3      (optional; `Q`, `p` or `gf:p`)
/// 2
/// 0 1
/// 0 0
/// ```
///
/// Blank lines and lines starting with `#` are skipped. A `field=` header
/// overrides `default_field`.
pub fn parse_matrix(text: &str, default_field: Field) -> Result<SquareMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut field = default_field;
    if let Some(header) = lines.peek().and_then(|l| l.strip_prefix("field=")) {
        field = header.parse()?;
        lines.next();
    }
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix text".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the dimension".into()))?;
    if n == 0 || n > MAX_DIM {
        return Err(Error::Parse(format!("dimension {n} not in 1..={MAX_DIM}")));
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
        let row: Vec<Scalar> = line
            .split_whitespace()
            .map(|tok| field.parse_scalar(tok))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                r + 1,
                row.len()
            )));
        }
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing input `{extra}`")));
    }
    SquareMatrix::from_rows(field, rows)
}
