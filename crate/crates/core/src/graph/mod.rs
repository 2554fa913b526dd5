//! Graphs of matrices in `QU_n`, partitions, graph types and ESOs.

mod digraph;
mod dot;
mod eso;
mod graph_type;
mod order;
mod partition;

pub use digraph::{graph_of, WeightedDigraph};
pub use dot::{matrix_to_dot, type_to_dot};
pub use eso::{
    apply_eso, apply_eso_in_place, elimination_moves, generic_eso, in_stabilizer,
    stabilizer_positions, EsoMove,
};
pub use graph_type::{ExtraArc, GraphType};
pub(crate) use graph_type::UnionFind;
pub use order::{belitskii_cmp, position_count, position_of, positions_in_order, rank_of, ArcSet};
pub use partition::SetPartition;
