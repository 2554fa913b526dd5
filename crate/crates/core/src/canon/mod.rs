//! The canonical form of a matrix under `B_n`-similarity.

mod params;
pub(crate) mod search;

use std::fmt;

pub use params::{dn_normalize, mark_parameters, Normalized};

use crate::arith::{Field, Scalar, SquareMatrix};
use crate::coset::{is_in_qu, reduce_to_coset_rep, Factor, Subpermutation, TransformLog};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, GraphType};
use search::{concrete_removal, Grid};

/// Upper bound on restarts caused by accidental cancellations.
const MAX_RESCANS: usize = 10_000;

/// Output of [`reduce_in_coset`].
#[derive(Clone, Debug)]
pub struct Reduced {
    pub matrix: SquareMatrix,
    pub log: TransformLog,
    /// Extra arcs left in place, in Belitskiĭ order.
    pub kept: Vec<(usize, usize)>,
}

/// Removes extra arcs of `A ∈ QU_n` in Belitskiĭ order.
///
/// A nonzero extra entry is removed whenever some sequence of stabilizing
/// ESOs zeroes it while leaving zero every earlier position that is
/// neither a chain arc nor kept. If a kept entry cancels by accident the
/// scan resumes from that position.
pub fn reduce_in_coset(a: &SquareMatrix, q: &Subpermutation) -> Result<Reduced> {
    if !is_in_qu(a, q) {
        return Err(Error::NotInCoset);
    }
    let grid = Grid::new(q);
    let n = grid.dim();
    let mut log = TransformLog::new(a.field(), n);
    let mut m = a.clone();
    let mut kept = ArcSet::new();
    let total = crate::graph::position_count(n);
    let mut r = 0;
    let mut rescans = 0;
    while r < total {
        let (i, j) = grid.pos(r);
        if q.contains(i, j) || m.is_zero_at(i - 1, j - 1) {
            r += 1;
            continue;
        }
        match concrete_removal(&grid, &m, &kept, r) {
            None => {
                kept.insert(r);
                r += 1;
            }
            Some((moves, next)) => {
                for mv in moves {
                    log.push(Factor::Elementary { p: mv.p, q: mv.q, lambda: mv.lambda })?;
                }
                m = next;
                let lost = kept.iter().find(|&k| {
                    let (x, y) = grid.pos(k);
                    m.is_zero_at(x - 1, y - 1)
                });
                match lost {
                    Some(k) => {
                        rescans += 1;
                        if rescans > MAX_RESCANS {
                            return Err(Error::Internal("reduction does not settle".into()));
                        }
                        kept = if k == 0 { ArcSet::new() } else { kept.truncated(k - 1) };
                        r = k;
                    }
                    None => r += 1,
                }
            }
        }
    }
    debug_assert!(is_in_qu(&m, q));
    let kept = kept.iter().map(|k| grid.pos(k)).collect();
    Ok(Reduced { matrix: m, log, kept })
}

/// A canonical form with its witness: `matrix = T·input·T⁻¹` for the `T`
/// of `witness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph_type: GraphType,
    /// Values of the marked arcs, in Belitskiĭ order.
    pub params: Vec<((usize, usize), Scalar)>,
    pub matrix: SquareMatrix,
    pub witness: TransformLog,
}

impl CanonicalForm {
    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// The `params:` line, or `None` without parameters.
    pub fn params_line(&self) -> Option<String> {
        if self.params.is_empty() {
            return None;
        }
        let n = self.matrix.dim();
        let parts: Vec<String> = self
            .params
            .iter()
            .map(|((i, j), v)| {
                let sep = if n > 9 { " " } else { "" };
                format!("{i}{sep}{j}={v}")
            })
            .collect();
        Some(format!("params: {}", parts.join(", ")))
    }
}

impl fmt::Display for CanonicalForm {
    /// Graph type, optional `params:` line, then the matrix.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.graph_type)?;
        if let Some(line) = self.params_line() {
            writeln!(f, "{line}")?;
        }
        write!(f, "{}", self.matrix)
    }
}

/// The canonical form of `A ∈ N_n`.
pub fn canon(a: &SquareMatrix) -> Result<CanonicalForm> {
    let (in_coset, q, mut witness) = reduce_to_coset_rep(a)?;
    let reduced = reduce_in_coset(&in_coset, &q)?;
    witness.extend(&reduced.log)?;
    let graph_type = mark_parameters(&GraphType::from_subpermutation(&q, &reduced.kept)?);
    let normalized = dn_normalize(&reduced.matrix, &graph_type)?;
    if normalized.diagonal.iter().any(|d| !d.is_one()) {
        witness.push(Factor::Diagonal(normalized.diagonal))?;
    }
    if !is_in_qu(&normalized.matrix, &q) {
        return Err(Error::Internal("canonical matrix left QU_n".into()));
    }
    Ok(CanonicalForm {
        graph_type,
        params: normalized.params,
        matrix: normalized.matrix,
        witness,
    })
}
