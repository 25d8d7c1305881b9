//! Pendant/internal path detection and branch classification.
//!
//! Terminology used throughout the crate:
//!
//! * A *pendant path* hangs off an anchor of degree > 2 and runs through
//!   degree-2 vertices to a leaf. Its length counts edges, i.e. the leaf and
//!   every interior degree-2 vertex. A bare leaf on a hub is a pendant path
//!   of length 1.
//! * An *internal path* joins two anchors of degree > 2 through at least one
//!   interior degree-2 vertex; its length also counts edges (so it is at
//!   least 2). Two adjacent hubs do not form an internal path.
//! * A *B_k branch* is a non-root vertex with exactly `k` children, each of
//!   which heads a 2-vertex pendant path. Counting its parent edge, the
//!   branch root has degree `k + 1`.

use crate::graph::canonical::{tree_center, Center};
use crate::graph::tree::Tree;
use serde::{Deserialize, Serialize};

/// A pendant path: `anchor` has degree > 2, `leaf` ends the chain, `length`
/// counts edges between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantPath {
    pub anchor: usize,
    pub leaf: usize,
    pub length: usize,
}

/// An internal path between two anchors of degree > 2 with `length - 1 >= 1`
/// interior degree-2 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InternalPath {
    pub ends: (usize, usize),
    pub length: usize,
}

/// Every pendant and internal path of a tree. For trees with maximum degree
/// at most 2 (pure paths) there are no anchors at all; both lists are empty
/// and `degenerate_path` is set instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct PathReport {
    pub pendant: Vec<PendantPath>,
    pub internal: Vec<InternalPath>,
    pub degenerate_path: bool,
}

impl PathReport {
    pub fn pendant_lengths(&self) -> Vec<usize> {
        self.pendant.iter().map(|p| p.length).collect()
    }
}

/// Find all pendant and internal paths by walking degree-2 chains away from
/// every anchor.
pub fn find_paths(t: &Tree) -> PathReport {
    let degs = t.degrees();
    if degs.iter().all(|&d| d <= 2) {
        return PathReport {
            pendant: Vec::new(),
            internal: Vec::new(),
            degenerate_path: true,
        };
    }
    let adj = t.adjacency();
    let mut report = PathReport::default();
    for a in 0..t.n() {
        if degs[a] <= 2 {
            continue;
        }
        for &first in &adj[a] {
            if degs[first] > 2 {
                continue; // hub-hub edge: not a path of either kind
            }
            // Walk through degree-2 vertices until the chain ends.
            let (mut prev, mut cur, mut steps) = (a, first, 1usize);
            while degs[cur] == 2 {
                let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                steps += 1;
            }
            if degs[cur] == 1 {
                report.pendant.push(PendantPath {
                    anchor: a,
                    leaf: cur,
                    length: steps,
                });
            } else if a < cur {
                // Anchor at the far end; record once per unordered pair.
                report.internal.push(InternalPath {
                    ends: (a, cur),
                    length: steps,
                });
            }
        }
    }
    report.pendant.sort_unstable_by_key(|p| (p.anchor, p.leaf));
    report.internal.sort_unstable_by_key(|p| p.ends);
    report
}

/// Branch classification of every vertex under a fixed rooting, together with
/// the tree's path report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchProfile {
    pub root: usize,
    /// Parent of each vertex; the root maps to itself.
    pub parent: Vec<usize>,
    /// Breadth-first visit sequence starting at the root. Neighbors are
    /// explored in ascending vertex order, so the sequence is deterministic.
    pub order: Vec<usize>,
    /// `Some(k)` when the vertex is the root of a B_k branch.
    pub branch_kind: Vec<Option<usize>>,
    pub paths: PathReport,
}

impl BranchProfile {
    /// Roots of B_k branches for exactly this `k`, ascending by vertex id.
    pub fn roots_of(&self, k: usize) -> Vec<usize> {
        (0..self.branch_kind.len())
            .filter(|&v| self.branch_kind[v] == Some(k))
            .collect()
    }

    /// Roots of B_k branches with `k >= min_k`.
    pub fn roots_at_least(&self, min_k: usize) -> Vec<usize> {
        (0..self.branch_kind.len())
            .filter(|&v| matches!(self.branch_kind[v], Some(k) if k >= min_k))
            .collect()
    }

    pub fn count_of(&self, k: usize) -> usize {
        self.roots_of(k).len()
    }

    /// Position of every vertex in the breadth-first visit sequence.
    pub fn discovery_ranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            rank[v] = i;
        }
        rank
    }
}

/// The rooting used when none is stored on the tree: the canonical center,
/// breaking bicentral ties toward the rooting with the smaller canonical
/// sequence (and by vertex id when those tie).
pub fn effective_root(t: &Tree) -> usize {
    if let Some(r) = t.root() {
        return r;
    }
    match tree_center(t) {
        Center::One(c) => c,
        Center::Two(a, b) => {
            let adj = t.adjacency();
            let sa = rooted_sequence(&adj, a);
            let sb = rooted_sequence(&adj, b);
            match sa.cmp(&sb) {
                std::cmp::Ordering::Greater => b,
                _ => a.min(b),
            }
        }
    }
}

fn rooted_sequence(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    fn rec(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<usize> {
        let mut blocks: Vec<Vec<usize>> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(adj, w, v))
            .collect();
        blocks.sort_unstable_by(|x, y| y.cmp(x));
        let mut seq = vec![0];
        for b in blocks {
            seq.extend(b.into_iter().map(|d| d + 1));
        }
        seq
    }
    rec(adj, root, usize::MAX)
}

/// Classify the B_k branches of `t` under its stored root, or the canonical
/// center rooting when none is stored.
pub fn detect_branches(t: &Tree) -> BranchProfile {
    let root = effective_root(t);
    let adj = t.adjacency();
    let n = t.n();
    let degs = t.degrees();

    // Orient the tree away from the root.
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX && w != root {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    let mut branch_kind = vec![None; n];
    for &v in &order {
        if v == root {
            continue;
        }
        let children: Vec<usize> = adj[v].iter().copied().filter(|&w| w != parent[v]).collect();
        if children.is_empty() {
            continue;
        }
        // Every child must head a 2-vertex pendant path: a degree-2 vertex
        // whose single child is a leaf.
        let all_p2 = children.iter().all(|&c| {
            degs[c] == 2 && adj[c].iter().any(|&g| g != v && degs[g] == 1)
        });
        if all_p2 {
            branch_kind[v] = Some(children.len());
        }
    }

    BranchProfile {
        root,
        parent,
        order,
        branch_kind,
        paths: find_paths(t),
    }
}
