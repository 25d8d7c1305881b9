//! Exhaustive generators: all non-isomorphic free trees of an order, all
//! labeled trees with a prescribed degree sequence, counting recurrences
//! that cross-check both, and brute-force minimum-ABC search.

pub mod counts;
pub mod free;
pub mod prufer;
pub mod rooted;
pub mod search;

pub use counts::{free_tree_count, rooted_tree_count};
pub use free::{free_trees, FreeTreeCursor};
pub use prufer::{encode, labeled_trees_with_degrees, DegreeTreeIter, PruferCode};
pub use rooted::RootedTreeCursor;
pub use search::{brute_force_min_abc, search_space_size, SearchResult, WorkRange, BRUTE_CAP};
