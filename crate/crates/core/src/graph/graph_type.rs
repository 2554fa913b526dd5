//! Graph types: a partition plus a Belitskiĭ-ordered list of extra arcs,
//! some of them marked as parameters.
//!
//! Text grammar: `<partition>: <arcs>`, arcs joined by `|`, each arc two
//! labels (space separated when a label exceeds 9), parameter arcs wrapped
//! in underscores, and `empty`, `∅` or nothing for no arcs:
//! `1256|3478: 57|_13_`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::order::{belitskii_cmp, rank_of, ArcSet};
use super::partition::{join_labels, split_labels, SetPartition};
use crate::arith::{Field, Scalar, SquareMatrix};
use crate::coset::Subpermutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtraArc {
    pub i: usize,
    pub j: usize,
    pub marked: bool,
}

impl ExtraArc {
    pub fn plain(i: usize, j: usize) -> Self {
        ExtraArc { i, j, marked: false }
    }

    pub fn pos(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphType {
    partition: SetPartition,
    q: Subpermutation,
    arcs: Vec<ExtraArc>,
}

impl GraphType {
    /// Validates that every arc starts at a non-head `i` with `i⁺ < j`, and
    /// that arcs strictly increase in Belitskiĭ order.
    pub fn new(partition: SetPartition, arcs: Vec<ExtraArc>) -> Result<Self> {
        let q = partition.to_subpermutation();
        let n = q.dim();
        for a in &arcs {
            let ok = a.i >= 1
                && a.j <= n
                && q.succ(a.i).is_some_and(|s| s < a.j);
            if !ok {
                return Err(Error::InvalidGraphType(format!(
                    "arc ({},{}) is not an allowed extra arc of {partition}",
                    a.i, a.j
                )));
            }
        }
        for w in arcs.windows(2) {
            if belitskii_cmp(w[0].pos(), w[1].pos()) != Ordering::Less {
                return Err(Error::InvalidGraphType(format!(
                    "arcs ({},{}) and ({},{}) out of order",
                    w[0].i, w[0].j, w[1].i, w[1].j
                )));
            }
        }
        Ok(GraphType { partition, q, arcs })
    }

    /// Unmarked arcs, sorted into Belitskiĭ order.
    pub fn unmarked(partition: SetPartition, positions: &[(usize, usize)]) -> Result<Self> {
        let mut positions = positions.to_vec();
        positions.sort_by(|a, b| belitskii_cmp(*a, *b));
        positions.dedup();
        Self::new(
            partition,
            positions.into_iter().map(|(i, j)| ExtraArc::plain(i, j)).collect(),
        )
    }

    pub fn from_subpermutation(q: &Subpermutation, positions: &[(usize, usize)]) -> Result<Self> {
        Self::unmarked(SetPartition::from_subpermutation(q), positions)
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn subpermutation(&self) -> &Subpermutation {
        &self.q
    }

    pub fn arcs(&self) -> &[ExtraArc] {
        &self.arcs
    }

    pub fn extra_positions(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(ExtraArc::pos).collect()
    }

    pub fn marked_positions(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().filter(|a| a.marked).map(ExtraArc::pos).collect()
    }

    pub fn mark_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.marked).count()
    }

    /// The same arcs with marks replaced.
    pub fn with_marks(&self, mut marked: impl FnMut((usize, usize)) -> bool) -> GraphType {
        let mut out = self.clone();
        for a in &mut out.arcs {
            a.marked = marked(a.pos());
        }
        out
    }

    pub fn without_marks(&self) -> GraphType {
        self.with_marks(|_| false)
    }

    /// All arcs: `Q`'s pairs and the extra arcs.
    pub fn all_arcs(&self) -> Vec<(usize, usize)> {
        let mut all = self.q.pairs();
        all.extend(self.extra_positions());
        all
    }

    pub fn extra_set(&self) -> ArcSet {
        let n = self.dim();
        ArcSet::from_ranks(self.arcs.iter().map(|a| rank_of(n, a.i, a.j)))
    }

    /// Connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.dim() + 1);
        let mut count = self.dim();
        for (i, j) in self.all_arcs() {
            if uf.union(i, j) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `N − n + m`, with `N` the total number of arcs.
    pub fn parameter_count(&self) -> usize {
        self.q.rank() + self.arcs.len() + self.component_count() - self.dim()
    }

    /// The matrix with weight 1 on unmarked arcs and the given values, in
    /// Belitskiĭ order, on marked arcs.
    pub fn realize(&self, field: Field, params: &[Scalar]) -> Result<SquareMatrix> {
        if params.len() != self.mark_count() {
            return Err(Error::DimensionMismatch { left: self.mark_count(), right: params.len() });
        }
        let mut m = self.q.to_matrix(field);
        let mut values = params.iter();
        for a in &self.arcs {
            let v = if a.marked {
                values.next().expect("length checked").clone()
            } else {
                field.one()
            };
            if v.is_zero() {
                return Err(Error::OutOfRange("parameter values must be nonzero".into()));
            }
            m.set(a.i - 1, a.j - 1, v);
        }
        Ok(m)
    }

    /// Sort key: partition text, then arcs in Belitskiĭ order.
    pub fn sort_key(&self) -> (String, Vec<usize>, Vec<bool>) {
        let n = self.dim();
        (
            self.partition.to_string(),
            self.arcs.iter().map(|a| rank_of(n, a.i, a.j)).collect(),
            self.arcs.iter().map(|a| a.marked).collect(),
        )
    }
}

impl PartialOrd for GraphType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GraphType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.partition)?;
        if self.arcs.is_empty() {
            return write!(f, "empty");
        }
        let n = self.dim();
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|a| {
                let s = join_labels(n, &[a.i, a.j]);
                if a.marked {
                    format!("_{s}_")
                } else {
                    s
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for GraphType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (part, arcs) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidGraphType(format!("missing `:` in `{s}`")))?;
        let partition: SetPartition = part.trim().parse()?;
        let arcs = arcs.trim();
        if arcs.is_empty() || arcs == "∅" || arcs == "empty" {
            return GraphType::new(partition, Vec::new());
        }
        let spaced = partition.dim() > 9 || arcs.contains(char::is_whitespace);
        let mut out = Vec::new();
        for token in arcs.split('|').map(str::trim) {
            let (body, marked) = match token.strip_prefix('_').and_then(|t| t.strip_suffix('_')) {
                Some(inner) => (inner.trim(), true),
                None => (token, false),
            };
            let labels = split_labels(body, spaced && body.contains(char::is_whitespace))
                .map_err(|_| Error::InvalidGraphType(format!("bad arc `{token}`")))?;
            match labels[..] {
                [i, j] => out.push(ExtraArc { i, j, marked }),
                _ => return Err(Error::InvalidGraphType(format!("bad arc `{token}`"))),
            }
        }
        GraphType::new(partition, out)
    }
}

/// Disjoint sets over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns whether the two sets were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
