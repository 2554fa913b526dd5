//! Dense square matrices over a [`Field`].

use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 32;

/// A dense `n x n` matrix with exact entries, stored row-major.
///
/// Indices are 0-based in the API; text formats use 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn zero(field: Field, n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} above {MAX_DIM}");
        SquareMatrix {
            n,
            field,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// `I + lambda * E_{pq}`.
    pub fn elementary(field: Field, n: usize, p: usize, q: usize, lambda: Scalar) -> Self {
        let mut m = Self::identity(field, n);
        let v = &m.get(p, q).clone() + &lambda;
        m.set(p, q, v);
        m
    }

    pub fn diagonal(field: Field, diag: Vec<Scalar>) -> Self {
        let mut m = Self::zero(field, diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `rows.len()`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::OutOfRange(format!("dimension {n} not in 1..={MAX_DIM}")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field.to_string(),
                        right: v.field().to_string(),
                    });
                }
                entries.push(v);
            }
        }
        Ok(SquareMatrix { n, field, entries })
    }

    /// Integer entries, convenient for fixtures.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.n + j] = v;
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_zero()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    fn check_conformable(&self, other: &SquareMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.check_conformable(other)?;
        let n = self.n;
        let mut out = SquareMatrix::zero(self.field, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.check_conformable(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SquareMatrix { n: self.n, field: self.field, entries })
    }

    pub fn scale(&self, c: &Scalar) -> SquareMatrix {
        SquareMatrix {
            n: self.n,
            field: self.field,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> SquareMatrix {
        let mut out = SquareMatrix::zero(self.field, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact inverse of a nonsingular upper-triangular matrix, by back substitution.
    pub fn invert_triangular(&self) -> Result<SquareMatrix> {
        if !self.is_upper_triangular() {
            return Err(Error::NotUpperTriangular);
        }
        let n = self.n;
        let mut inv = SquareMatrix::zero(self.field, n);
        let diag_inv: Vec<Scalar> = (0..n)
            .map(|i| self.get(i, i).inverse().ok_or(Error::Singular(i + 1)))
            .collect::<Result<_>>()?;
        // Column by column: solve B x = e_j from the bottom up.
        for j in 0..n {
            inv.set(j, j, diag_inv[j].clone());
            for i in (0..j).rev() {
                let mut acc = self.field.zero();
                for k in i + 1..=j {
                    let b = self.get(i, k);
                    if !b.is_zero() {
                        acc = &acc + &(b * inv.get(k, j));
                    }
                }
                inv.set(i, j, -&(&acc * &diag_inv[i]));
            }
        }
        Ok(inv)
    }

    /// `T * self * T^{-1}`, with `T^{-1}` supplied by the caller.
    pub fn conjugate_with(&self, t: &SquareMatrix, t_inv: &SquareMatrix) -> Result<SquareMatrix> {
        t.multiply(self)?.multiply(t_inv)
    }

    /// Rank of the submatrix on the given 0-based rows and columns.
    pub fn submatrix_rank(&self, rows: &[usize], cols: &[usize]) -> usize {
        if rows.is_empty() || cols.is_empty() {
            return 0;
        }
        let mut block: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        row_echelon_rank(&mut block)
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        let idx: Vec<usize> = (0..self.n).collect();
        self.submatrix_rank(&idx, &idx)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.is_zero_at(i, j)))
    }

    /// Member of N_n.
    pub fn is_strictly_upper(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.is_zero_at(i, i))
    }

    /// Member of B_n.
    pub fn is_nonsingular_upper(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| !self.is_zero_at(i, i))
    }

    /// Member of U_n.
    pub fn is_unit_upper(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i).is_one())
    }

    /// Member of D_n.
    pub fn is_nonsingular_diagonal(&self) -> bool {
        self.is_nonsingular_upper()
            && (0..self.n).all(|i| (i + 1..self.n).all(|j| self.is_zero_at(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Positions of nonzero entries, row-major.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.is_zero_at(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `self^k`, `k >= 0`.
    pub fn pow(&self, k: u32) -> SquareMatrix {
        let mut acc = SquareMatrix::identity(self.field, self.n);
        for _ in 0..k {
            acc = acc.multiply(self).expect("conformable");
        }
        acc
    }

    /// Principal submatrix on the given 0-based indices, in the order given.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SquareMatrix {
        let mut out = SquareMatrix::zero(self.field, idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }
}

/// In-place Gaussian elimination with first-nonzero pivoting; returns the rank.
pub(crate) fn row_echelon_rank(rows: &mut [Vec<Scalar>]) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        for r in rank + 1..height {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            let (top, bottom) = rows.split_at_mut(r);
            for (x, p) in bottom[0][col..width].iter_mut().zip(&top[rank][col..width]) {
                *x = &*x - &(&factor * p);
            }
        }
        rank += 1;
        if rank == height {
            break;
        }
    }
    rank
}

impl fmt::Display for SquareMatrix {
    /// The matrix text format: optional `field=p`, then `n`, then the rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Field::Prime(p) = self.field {
            writeln!(f, "field={p}")?;
        }
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
