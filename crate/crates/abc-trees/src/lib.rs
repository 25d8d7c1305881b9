//! Tools for studying trees that minimize the atom-bond connectivity (ABC) index.
//!
//! The ABC index of a graph `G` is `sum over edges uv of sqrt((d(u)+d(v)-2)/(d(u)*d(v)))`.
//! This crate provides:
//!
//! * exact, bit-reproducible evaluation of the index ([`abc_index`]),
//! * isomorphism-free enumeration of trees and brute-force minimum search
//!   ([`enumerate`]),
//! * greedy-tree construction from degree sequences and a pruned
//!   degree-sequence search ([`greedy`]),
//! * local rewrites that provably decrease the index on trees containing
//!   certain branch configurations, with exact and closed-form deltas
//!   ([`transforms`]),
//! * numeric verification of the monotonicity facts, limits, and constants
//!   those rewrites rely on ([`analysis`]).
//!
//! ```
//! use abc_trees::{abc_index, Tree};
//!
//! // The path on four vertices: every edge weighs 1/sqrt(2).
//! let p4 = Tree::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
//! let abc = abc_index(&p4).unwrap();
//! assert!((abc.value - 3.0 / 2f64.sqrt()).abs() < 1e-12);
//! ```

mod error;

pub mod analysis;
pub mod enumerate;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::abc::{abc_index, edge_addition_delta, edge_weight, AbcValue, ABC_EQ_TOL};
pub use graph::canonical::{canonical_form, tree_center, Center, LevelSequence};
pub use graph::paths::{detect_branches, find_paths, BranchProfile, PathReport};
pub use graph::properties::{minimal_abc_properties, CheckStatus, PropertyReport};
pub use graph::tree::{DegreeSequence, SimpleGraph, Tree};
pub use graph::build_kragujevac;
