//! Canonical forms of nilpotent upper-triangular matrices under similarity
//! by invertible upper-triangular matrices.
//!
//! The pipeline for a concrete matrix `A`:
//!
//! 1. [`coset::reduce_to_coset_rep`] finds the subpermutation `Q` of the
//!    double coset `B_n A B_n` and conjugates `A` into `QU_n`.
//! 2. [`canon::reduce_in_coset`] removes extra arcs of the graph of `A` in
//!    Belitskiĭ order with stabilizing elementary operations.
//! 3. [`canon::mark_parameters`] and [`canon::dn_normalize`] fix the
//!    remaining weights with a diagonal conjugation.
//!
//! [`canon::canon`] runs all three. [`enumerate`] lists the possible
//! canonical graph types for a given `n`, and [`oracle`] checks the
//! canonizer against brute-force orbit computations over small fields.

pub mod arith;
pub mod canon;
pub mod coset;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;

pub use arith::{parse_matrix, Field, Scalar, SquareMatrix};
pub use canon::{canon, CanonicalForm};
pub use coset::Subpermutation;
pub use error::{Error, Result};
pub use graph::{GraphType, SetPartition};
