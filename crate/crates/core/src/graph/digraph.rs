use std::collections::BTreeMap;

use super::order::{rank_of, ArcSet};
use crate::arith::{Scalar, SquareMatrix};

/// The weighted graph of a strictly upper matrix: an arc `(i, j)` for every
/// nonzero entry, carrying that entry as its weight. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    weights: BTreeMap<(usize, usize), Scalar>,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> Self {
        WeightedDigraph { n, weights: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Sets a weight; a zero weight removes the arc.
    pub fn set_weight(&mut self, i: usize, j: usize, w: Scalar) {
        assert!(i < j && j <= self.n, "({i},{j}) is not an upper arc");
        if w.is_zero() {
            self.weights.remove(&(i, j));
        } else {
            self.weights.insert((i, j), w);
        }
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.weights.get(&(i, j))
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.weights.contains_key(&(i, j))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.weights.keys().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.weights.len()
    }

    pub fn arc_set(&self) -> ArcSet {
        ArcSet::from_ranks(self.arcs().map(|(i, j)| rank_of(self.n, i, j)))
    }
}

/// The graph of `A`; entries on or below the diagonal are ignored.
pub fn graph_of(a: &SquareMatrix) -> WeightedDigraph {
    let n = a.dim();
    let mut g = WeightedDigraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !a.is_zero_at(i, j) {
                g.set_weight(i + 1, j + 1, a.get(i, j).clone());
            }
        }
    }
    g
}
