//! The greedy-tree construction: realize a degree sequence by breadth-first
//! largest-degree-first assignment. Within a fixed degree sequence this
//! realization minimizes the ABC index, which is what makes the
//! degree-sequence search in this module's sibling work.

use crate::error::{Error, Result};
use crate::graph::canonical::canonical_form;
use crate::graph::tree::{DegreeSequence, Tree};
use std::collections::VecDeque;

/// A tree built by the greedy construction, with its BFS level assignment
/// and the degree sequence it realizes.
#[derive(Debug, Clone)]
pub struct GreedyTree {
    pub tree: Tree,
    /// BFS depth of each vertex; the root (vertex 0) is at level 0.
    pub levels: Vec<usize>,
    pub source: DegreeSequence,
}

/// Build the greedy realization of `ds`:
///
/// 1. the root takes the largest degree;
/// 2. its neighbors take the next-largest degrees in non-increasing order;
/// 3. construction proceeds level by level, always expanding the placed
///    vertex with the largest degree first.
///
/// Because vertices are placed in non-increasing degree order, plain FIFO
/// expansion already visits placed vertices largest-degree-first, so a
/// queue implements step 3 exactly.
pub fn greedy_tree(ds: &DegreeSequence) -> Result<GreedyTree> {
    if !ds.realizable_as_tree() {
        return Err(Error::Domain(format!(
            "degree sequence {ds} is not realizable as a tree"
        )));
    }
    let n = ds.len();
    if n < 2 {
        return Err(Error::Domain(
            "greedy construction needs at least 2 vertices".into(),
        ));
    }
    let degs = ds.as_slice();
    let mut edges = Vec::with_capacity(n - 1);
    let mut levels = vec![0usize; n];
    let mut queue = VecDeque::from([0usize]);
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        // Non-root vertices already spend one degree on their parent edge.
        let children = degs[v] - usize::from(v != 0);
        for _ in 0..children {
            debug_assert!(next < n, "realizable sequences never run out of vertices");
            edges.push((v, next));
            levels[next] = levels[v] + 1;
            queue.push_back(next);
            next += 1;
        }
    }
    let tree = Tree::new(n, edges)?.with_root(0)?;
    debug_assert_eq!(tree.degree_sequence(), *ds);
    Ok(GreedyTree {
        tree,
        levels,
        source: ds.clone(),
    })
}

/// Whether `t` is isomorphic to the greedy realization of its own degree
/// sequence. Single vertices are trivially greedy.
pub fn is_greedy(t: &Tree) -> bool {
    if t.n() < 2 {
        return true;
    }
    let greedy = greedy_tree(&t.degree_sequence())
        .expect("a tree's own degree sequence is always realizable");
    canonical_form(t) == canonical_form(&greedy.tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::abc::abc_from_parts;

    fn ds(v: Vec<usize>) -> DegreeSequence {
        DegreeSequence::new(v).unwrap()
    }

    #[test]
    fn star_and_path_are_forced() {
        let star = greedy_tree(&ds(vec![3, 1, 1, 1])).unwrap();
        assert_eq!(star.tree.degree(0), 3);
        assert_eq!(star.levels, vec![0, 1, 1, 1]);

        let path = greedy_tree(&ds(vec![2, 2, 2, 2, 1, 1])).unwrap();
        assert!(path.tree.degrees().iter().all(|&d| d <= 2));
        assert_eq!(path.tree.n(), 6);
    }

    #[test]
    fn single_edge() {
        let g = greedy_tree(&ds(vec![1, 1])).unwrap();
        assert_eq!(g.tree.edges(), &[(0, 1)]);
    }

    #[test]
    fn degree_conservation() {
        for degs in [
            vec![4, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1],
            vec![5, 2, 2, 2, 2, 1, 1, 1, 1, 1],
            vec![3, 3, 2, 2, 2, 2, 1, 1, 1, 1],
        ] {
            let source = ds(degs);
            let g = greedy_tree(&source).unwrap();
            assert_eq!(g.tree.degree_sequence(), source);
            assert_eq!(
                g.levels,
                {
                    // Levels must agree with BFS depths in the built tree.
                    let adj = g.tree.adjacency();
                    let mut depth = vec![usize::MAX; g.tree.n()];
                    depth[0] = 0;
                    let mut q = VecDeque::from([0usize]);
                    while let Some(v) = q.pop_front() {
                        for &w in &adj[v] {
                            if depth[w] == usize::MAX {
                                depth[w] = depth[v] + 1;
                                q.push_back(w);
                            }
                        }
                    }
                    depth
                },
            );
        }
    }

    #[test]
    fn greedy_round_trip() {
        let g = greedy_tree(&ds(vec![4, 3, 2, 2, 2, 1, 1, 1, 1, 1])).unwrap();
        assert!(is_greedy(&g.tree));
    }

    #[test]
    fn non_greedy_realization_detected() {
        // Degree sequence (3,3,2,2,1,1,1,1): greedy keeps the hubs adjacent;
        // a realization with a degree-2 vertex between the hubs (an internal
        // path) is a different and strictly worse tree.
        let greedy = greedy_tree(&ds(vec![3, 3, 2, 2, 1, 1, 1, 1])).unwrap();
        let other = Tree::new(
            8,
            vec![(0, 2), (1, 2), (0, 7), (3, 7), (0, 4), (1, 5), (1, 6)],
        )
        .unwrap();
        assert_eq!(other.degree_sequence(), ds(vec![3, 3, 2, 2, 1, 1, 1, 1]));
        assert!(!is_greedy(&other));
        let abc = |t: &Tree| abc_from_parts(t.degrees(), t.edges());
        assert!(abc(&greedy.tree) < abc(&other) - 1e-9);
    }

    #[test]
    fn equal_abc_but_not_greedy() {
        // Swapping a leaf and a 2-chain between the two hubs keeps every
        // edge-weight class (all degree-2 edges weigh 1/sqrt(2)), so this
        // realization ties the greedy tree exactly while not being greedy.
        let greedy = greedy_tree(&ds(vec![3, 3, 2, 2, 1, 1, 1, 1])).unwrap();
        let tied = Tree::new(
            8,
            vec![(0, 1), (0, 2), (2, 3), (0, 4), (1, 5), (5, 6), (1, 7)],
        )
        .unwrap();
        assert!(!is_greedy(&tied));
        let abc = |t: &Tree| abc_from_parts(t.degrees(), t.edges());
        assert!((abc(&greedy.tree) - abc(&tied)).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(greedy_tree(&ds(vec![3, 3, 1, 1])).is_err());
        assert!(greedy_tree(&ds(vec![0])).is_err());
    }
}
