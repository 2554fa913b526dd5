//! Graphviz output. Vertices `1..n` left to right, chain arcs solid,
//! extra arcs dashed and labeled with their weight or parameter name.

use std::fmt::Write;

use super::digraph::graph_of;
use super::graph_type::GraphType;
use crate::arith::SquareMatrix;
use crate::coset::Subpermutation;

fn header(out: &mut String, n: usize) {
    out.push_str("digraph G {\n  rankdir=LR;\n  node [shape=circle];\n");
    let nodes: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join("; "));
    for v in 1..n {
        let _ = writeln!(out, "  {v} -> {} [style=invis];", v + 1);
    }
}

/// DOT for a graph type; parameter arcs are labeled `l1`, `l2`, … in
/// Belitskiĭ order, other extra arcs `1`.
pub fn type_to_dot(t: &GraphType) -> String {
    let mut out = String::new();
    header(&mut out, t.dim());
    for (i, j) in t.subpermutation().pairs() {
        let _ = writeln!(out, "  {i} -> {j};");
    }
    let mut k = 0;
    for a in t.arcs() {
        let label = if a.marked {
            k += 1;
            format!("l{k}")
        } else {
            "1".to_string()
        };
        let _ = writeln!(out, "  {} -> {} [style=dashed, label=\"{label}\"];", a.i, a.j);
    }
    out.push_str("}\n");
    out
}

/// DOT for a concrete matrix; arcs of `q` solid, all others dashed with
/// their weights.
pub fn matrix_to_dot(a: &SquareMatrix, q: &Subpermutation) -> String {
    let mut out = String::new();
    header(&mut out, a.dim());
    let g = graph_of(a);
    for (i, j) in g.arcs() {
        let w = g.weight(i, j).expect("listed arc");
        if q.contains(i, j) {
            let _ = writeln!(out, "  {i} -> {j};");
        } else {
            let _ = writeln!(out, "  {i} -> {j} [style=dashed, label=\"{w}\"];");
        }
    }
    out.push_str("}\n");
    out
}
