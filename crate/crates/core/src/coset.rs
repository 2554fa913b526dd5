//! Double cosets `B_n Q B_n` of strictly upper-triangular matrices.
//!
//! A coset is named by a subpermutation `Q`, read off the rank profile of
//! any member. Every member is `B_n`-similar to an element of the coset
//! representative set `QU_n`.

use std::fmt;

use crate::arith::{Field, Scalar, SquareMatrix};
use crate::error::{Error, Result};

/// A nilpotent subpermutation: pairs `(i, σ(i))` with `i < σ(i)`, each row
/// and each column used at most once. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subpermutation {
    n: usize,
    /// `succ[i] = σ(i)`, index 0 unused.
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
}

impl Subpermutation {
    pub fn zero(n: usize) -> Self {
        Subpermutation {
            n,
            succ: vec![None; n + 1],
            pred: vec![None; n + 1],
        }
    }

    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut q = Self::zero(n);
        for &(i, j) in pairs {
            if i == 0 || j > n || i >= j {
                return Err(Error::InvalidSubpermutation(format!(
                    "pair ({i},{j}) is not strictly upper in dimension {n}"
                )));
            }
            if q.succ[i].is_some() || q.pred[j].is_some() {
                return Err(Error::InvalidSubpermutation(format!(
                    "pair ({i},{j}) reuses a row or column"
                )));
            }
            q.succ[i] = Some(j);
            q.pred[j] = Some(i);
        }
        Ok(q)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `σ(i)`, the chain successor `i⁺`.
    pub fn succ(&self, i: usize) -> Option<usize> {
        self.succ[i]
    }

    /// `σ⁻¹(j)`, the chain predecessor `j⁻`.
    pub fn pred(&self, j: usize) -> Option<usize> {
        self.pred[j]
    }

    /// Whether `i ∈ I`, i.e. row `i` of `Q` is nonzero.
    pub fn in_domain(&self, i: usize) -> bool {
        self.succ[i].is_some()
    }

    /// Chain heads are the last vertices of chains (`[n] \ I`).
    pub fn is_head(&self, i: usize) -> bool {
        self.succ[i].is_none()
    }

    /// Chain tails are the first vertices of chains (`[n] \ σ(I)`).
    pub fn is_tail(&self, j: usize) -> bool {
        self.pred[j].is_none()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter_map(|i| self.succ[i].map(|j| (i, j)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.succ.iter().flatten().count()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.succ[i] == Some(j)
    }

    pub fn to_matrix(&self, field: Field) -> SquareMatrix {
        let mut m = SquareMatrix::zero(field, self.n);
        for (i, j) in self.pairs() {
            m.set(i - 1, j - 1, field.one());
        }
        m
    }
}

impl fmt::Display for Subpermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", pairs.join(","))
    }
}

/// The table `r[i][j]` = rank of the lower-left `i x j` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    n: usize,
    r: Vec<Vec<usize>>,
}

impl RankProfile {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `r^{i,j}` for `0 <= i, j <= n`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.r[i][j]
    }

    /// The second difference of the profile, placed at `(n-i+1, j)`.
    ///
    /// Fails if the table is not the profile of any matrix.
    pub fn second_difference(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.n;
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let d = self.r[i][j] as i64 - self.r[i - 1][j] as i64 - self.r[i][j - 1] as i64
                    + self.r[i - 1][j - 1] as i64;
                match d {
                    0 => {}
                    1 => pairs.push((n - i + 1, j)),
                    _ => {
                        return Err(Error::Internal(format!(
                            "second difference {d} at ({i},{j})"
                        )))
                    }
                }
            }
        }
        pairs.sort_unstable();
        Ok(pairs)
    }
}

pub fn rank_profile(a: &SquareMatrix) -> RankProfile {
    let n = a.dim();
    let mut r = vec![vec![0; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate().skip(1) {
        let rows: Vec<usize> = (n - i..n).collect();
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            let cols: Vec<usize> = (0..j).collect();
            *cell = a.submatrix_rank(&rows, &cols);
        }
    }
    RankProfile { n, r }
}

/// The unique subpermutation `Q` with `A ∈ B_n Q B_n`.
pub fn subpermutation_of(a: &SquareMatrix) -> Result<Subpermutation> {
    if !a.is_strictly_upper() {
        return Err(Error::NotStrictlyUpper);
    }
    let pairs = rank_profile(a).second_difference()?;
    Subpermutation::new(a.dim(), &pairs)
}

/// Membership in `QU_n`: same nonzero rows as `Q`, and the leading entry of
/// each nonzero row `i` is a 1 in column `σ(i)`.
pub fn is_in_qu(a: &SquareMatrix, q: &Subpermutation) -> bool {
    if a.dim() != q.dim() {
        return false;
    }
    (1..=a.dim()).all(|i| {
        let lead = a.row(i - 1).iter().position(|v| !v.is_zero());
        match (q.succ(i), lead) {
            (None, None) => true,
            (Some(s), Some(c)) => c + 1 == s && a.get(i - 1, c).is_one(),
            _ => false,
        }
    })
}

/// One factor of a similarity transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `I + λE_{pq}`, 1-based.
    Elementary { p: usize, q: usize, lambda: Scalar },
    Diagonal(Vec<Scalar>),
    General(SquareMatrix),
}

impl Factor {
    pub fn matrix(&self, field: Field, n: usize) -> SquareMatrix {
        match self {
            Factor::Elementary { p, q, lambda } => {
                SquareMatrix::elementary(field, n, p - 1, q - 1, lambda.clone())
            }
            Factor::Diagonal(d) => SquareMatrix::diagonal(field, d.clone()),
            Factor::General(m) => m.clone(),
        }
    }
}

/// An ordered list of `B_n` factors applied by conjugation, with the
/// accumulated product: after pushing `F1, …, Fk`, `T = Fk ⋯ F1` and the
/// current matrix is `T · original · T⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformLog {
    factors: Vec<Factor>,
    t: SquareMatrix,
    t_inv: SquareMatrix,
}

impl TransformLog {
    pub fn new(field: Field, n: usize) -> Self {
        TransformLog {
            factors: Vec::new(),
            t: SquareMatrix::identity(field, n),
            t_inv: SquareMatrix::identity(field, n),
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn transform(&self) -> &SquareMatrix {
        &self.t
    }

    pub fn inverse(&self) -> &SquareMatrix {
        &self.t_inv
    }

    pub fn push(&mut self, factor: Factor) -> Result<()> {
        let n = self.t.dim();
        let field = self.t.field();
        match &factor {
            Factor::Elementary { p, q, lambda } => {
                let (p, q) = (p - 1, q - 1);
                // T <- (I + λE_pq) T: row p += λ row q.
                for c in 0..n {
                    let v = self.t.get(q, c);
                    if !v.is_zero() {
                        let nv = self.t.get(p, c) + &(lambda * v);
                        self.t.set(p, c, nv);
                    }
                }
                // T⁻¹ <- T⁻¹ (I - λE_pq): column q -= λ column p.
                for r in 0..n {
                    let v = self.t_inv.get(r, p);
                    if !v.is_zero() {
                        let nv = self.t_inv.get(r, q) - &(lambda * v);
                        self.t_inv.set(r, q, nv);
                    }
                }
            }
            other => {
                let m = other.matrix(field, n);
                let m_inv = m.invert_triangular()?;
                self.t = m.multiply(&self.t)?;
                self.t_inv = self.t_inv.multiply(&m_inv)?;
            }
        }
        self.factors.push(factor);
        Ok(())
    }

    /// Appends every factor of `other` after the factors of `self`.
    pub fn extend(&mut self, other: &TransformLog) -> Result<()> {
        for f in &other.factors {
            self.push(f.clone())?;
        }
        Ok(())
    }

    /// `T · a · T⁻¹`.
    pub fn apply(&self, a: &SquareMatrix) -> Result<SquareMatrix> {
        a.conjugate_with(&self.t, &self.t_inv)
    }

    /// Replays the factors one at a time, independently of the cached product.
    pub fn replay(&self, a: &SquareMatrix) -> Result<SquareMatrix> {
        let (field, n) = (a.field(), a.dim());
        let mut cur = a.clone();
        for f in &self.factors {
            let m = f.matrix(field, n);
            cur = cur.conjugate_with(&m, &m.invert_triangular()?)?;
        }
        Ok(cur)
    }
}

/// Conjugates `A ∈ N_n` into `QU_n`.
///
/// Returns `(A', Q, log)` with `A' = T·A·T⁻¹ ∈ QU_n`.
pub fn reduce_to_coset_rep(a: &SquareMatrix) -> Result<(SquareMatrix, Subpermutation, TransformLog)> {
    let q = subpermutation_of(a)?;
    let (field, n) = (a.field(), a.dim());
    let mut log = TransformLog::new(field, n);
    if is_in_qu(a, &q) {
        return Ok((a.clone(), q, log));
    }

    // Row-and-column elimination L·A·R = Q, rows bottom-up, leftmost pivot.
    // Only L is needed: L·A·L⁻¹ = Q·(R⁻¹L⁻¹).
    let mut w = a.clone();
    let mut l = SquareMatrix::identity(field, n);
    for i in (0..n).rev() {
        let Some(j) = w.row(i).iter().position(|v| !v.is_zero()) else {
            continue;
        };
        let pivot_inv = w.get(i, j).inverse().expect("pivot is nonzero");
        for k in 0..i {
            if w.get(k, j).is_zero() {
                continue;
            }
            let c = -&(w.get(k, j) * &pivot_inv);
            for col in 0..n {
                let v = w.get(k, col) + &(&c * w.get(i, col));
                w.set(k, col, v);
                let v = l.get(k, col) + &(&c * l.get(i, col));
                l.set(k, col, v);
            }
        }
        // Column operations clear the rest of row i; column j is already
        // zero outside row i, so they touch nothing else.
        for col in 0..n {
            w.set(i, col, if col == j { field.one() } else { field.zero() });
            let v = l.get(i, col) * &pivot_inv;
            l.set(i, col, v);
        }
    }
    debug_assert_eq!(w, q.to_matrix(field));

    let l_inv = l.invert_triangular()?;
    let c = a.conjugate_with(&l, &l_inv)?;
    // C = Q·D·U; choose D' with D'·Q·D·D'⁻¹ = Q by propagating along chains.
    let mut d = vec![field.one(); n + 1];
    for tail in (1..=n).filter(|&j| q.is_tail(j)) {
        let mut v = tail;
        while let Some(s) = q.succ(v) {
            d[s] = &d[v] * c.get(v - 1, s - 1);
            v = s;
        }
    }
    let d_prime = SquareMatrix::diagonal(field, d.split_off(1));
    let t = d_prime.multiply(&l)?;
    if t != SquareMatrix::identity(field, n) {
        log.push(Factor::General(t))?;
    }
    let reduced = log.apply(a)?;
    if !is_in_qu(&reduced, &q) {
        return Err(Error::Internal("coset reduction left QU_n".into()));
    }
    Ok((reduced, q, log))
}

/// One diagonal block of an upper-triangular matrix: `λI + N` on the
/// given 1-based positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalBlock {
    pub eigenvalue: Scalar,
    pub nilpotent: SquareMatrix,
    pub positions: Vec<usize>,
}

/// The block split of an upper-triangular matrix by diagonal values.
#[derive(Clone, Debug)]
pub struct Split {
    pub blocks: Vec<DiagonalBlock>,
    /// `C = T·A·T⁻¹` with `c_ij = 0` whenever `c_ii ≠ c_jj`.
    pub decoupled: SquareMatrix,
    pub log: TransformLog,
}

/// Decouples positions with distinct diagonal values.
///
/// Positions are cleared in Belitskiĭ order by conjugating with
/// `I + cE_ij`, `c = a_ij / (a_ii - a_jj)`.
pub fn split_upper_triangular(a: &SquareMatrix) -> Result<Split> {
    if !a.is_upper_triangular() {
        return Err(Error::NotUpperTriangular);
    }
    let (field, n) = (a.field(), a.dim());
    let mut log = TransformLog::new(field, n);
    let mut c = a.clone();
    for i in (0..n).rev() {
        for j in i + 1..n {
            if c.is_zero_at(i, j) || a.get(i, i) == a.get(j, j) {
                continue;
            }
            let gap = a.get(i, i) - a.get(j, j);
            let coeff = c.get(i, j).checked_div(&gap).expect("distinct diagonal");
            let step = Factor::Elementary { p: i + 1, q: j + 1, lambda: coeff };
            let m = step.matrix(field, n);
            c = c.conjugate_with(&m, &m.invert_triangular()?)?;
            debug_assert!(c.is_zero_at(i, j));
            log.push(step)?;
        }
    }
    let mut blocks: Vec<DiagonalBlock> = Vec::new();
    for k in 0..n {
        let lambda = a.get(k, k);
        match blocks.iter_mut().find(|b| &b.eigenvalue == lambda) {
            Some(b) => b.positions.push(k + 1),
            None => blocks.push(DiagonalBlock {
                eigenvalue: lambda.clone(),
                nilpotent: SquareMatrix::zero(field, 1),
                positions: vec![k + 1],
            }),
        }
    }
    for b in &mut blocks {
        let idx: Vec<usize> = b.positions.iter().map(|p| p - 1).collect();
        let shift = SquareMatrix::identity(field, idx.len()).scale(&-&b.eigenvalue);
        b.nilpotent = c.principal_submatrix(&idx).add(&shift)?;
    }
    Ok(Split { blocks, decoupled: c, log })
}
