//! Greedy realization of degree sequences and the degree-sequence-level
//! search for minimal-ABC trees.

mod construct;
mod dsearch;
mod sequences;

pub use construct::{greedy_tree, is_greedy, GreedyTree};
pub use dsearch::{ds_search_min_abc, DS_CAP};
pub use sequences::{degree_sequences, DsCandidate};
