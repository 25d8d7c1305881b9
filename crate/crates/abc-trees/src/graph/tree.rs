//! Validated tree and simple-graph values, plus degree sequences.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Normalize an edge so the smaller endpoint comes first.
fn normalize(e: (usize, usize)) -> (usize, usize) {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

/// Sorted edge list paired with the degree of every vertex.
type EdgesWithDegrees = (Vec<(usize, usize)>, Vec<usize>);

/// Validate an edge list against vertex count `n`: endpoints in range, no
/// self-loops, no duplicates. Returns the normalized, sorted edge list and
/// the degree of every vertex.
fn check_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<EdgesWithDegrees> {
    let mut es: Vec<(usize, usize)> = edges.into_iter().map(normalize).collect();
    es.sort_unstable();
    let mut degrees = vec![0usize; n];
    for (i, &(u, v)) in es.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if i > 0 && es[i - 1] == (u, v) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
        }
        degrees[u] += 1;
        degrees[v] += 1;
    }
    Ok((es, degrees))
}

/// True when the edge list connects all `n` vertices (checked by union-find).
fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

/// A tree on `n` vertices labeled `0..n`, stored as a sorted, normalized edge
/// list with cached degrees. Construction validates the tree property
/// (`n - 1` edges, connected, simple). An optional root records a preferred
/// orientation for branch classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    root: Option<usize>,
}

impl Tree {
    /// Build a tree from an edge list. Errors when the list is not a tree.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a tree needs at least one vertex".into()));
        }
        let (edges, degrees) = check_edges(n, edges)?;
        if edges.len() != n - 1 {
            return Err(Error::InvalidGraph(format!(
                "expected {} edges for a tree on {n} vertices, got {}",
                n - 1,
                edges.len()
            )));
        }
        if !is_connected(n, &edges) {
            return Err(Error::InvalidGraph("edge list is not connected".into()));
        }
        Ok(Tree {
            n,
            edges,
            degrees,
            root: None,
        })
    }

    /// Same tree with a designated root vertex.
    pub fn with_root(mut self, root: usize) -> Result<Self> {
        if root >= self.n {
            return Err(Error::InvalidGraph(format!(
                "root {root} out of range for {} vertices",
                self.n
            )));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// Adjacency lists, built on demand. Neighbor lists are sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&normalize((u, v))).is_ok()
    }

    /// The degree multiset, sorted non-increasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut ds = self.degrees.clone();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(ds)
    }
}

/// A simple graph on `n` vertices; connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let (edges, degrees) = check_edges(n, edges)?;
        Ok(SimpleGraph { n, edges, degrees })
    }

    pub fn from_tree(t: &Tree) -> Self {
        SimpleGraph {
            n: t.n(),
            edges: t.edges().to_vec(),
            degrees: t.degrees().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&normalize((u, v))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, &self.edges)
    }

    /// The graph with one extra edge `uv`. Errors when `uv` already exists
    /// or `u == v`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::Domain(format!("cannot add a self-loop at {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!("edge ({u}, {v}) out of range")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Domain(format!("edge ({u}, {v}) already present")));
        }
        let mut edges = self.edges.clone();
        edges.push(normalize((u, v)));
        SimpleGraph::new(self.n, edges)
    }
}

/// A degree multiset sorted non-increasing. `[0]` encodes the single-vertex
/// tree; every other tree-realizable sequence has positive entries summing to
/// `2(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Accepts any multiset of degrees; sorts it non-increasing.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Domain("empty degree sequence".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        if degrees == [0] {
            return Ok(DegreeSequence(degrees));
        }
        if degrees.contains(&0) {
            return Err(Error::Domain(
                "zero degree only allowed in the single-vertex sequence [0]".into(),
            ));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// True when some tree has exactly this degree multiset: either `[0]`
    /// or `n >= 2` positive entries summing to `2(n-1)`.
    pub fn realizable_as_tree(&self) -> bool {
        if self.0 == [0] {
            return true;
        }
        let n = self.0.len();
        n >= 2 && self.0.iter().sum::<usize>() == 2 * (n - 1)
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.0.iter().filter(|&&d| d == degree).count()
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_accepts_path_and_star() {
        let p4 = Tree::new(4, vec![(2, 3), (0, 1), (1, 2)]).unwrap();
        assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.degrees(), &[1, 2, 2, 1]);
        let s4 = Tree::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(s4.degree(0), 3);
        assert_eq!(s4.degree_sequence().as_slice(), &[3, 1, 1, 1]);
    }

    #[test]
    fn tree_rejects_bad_edge_lists() {
        assert!(Tree::new(0, vec![]).is_err());
        // Wrong edge count.
        assert!(Tree::new(3, vec![(0, 1)]).is_err());
        // Cycle plus isolated vertex: right count, disconnected.
        assert!(Tree::new(4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        // Self-loop.
        assert!(Tree::new(2, vec![(1, 1)]).is_err());
        // Duplicate edge.
        assert!(Tree::new(3, vec![(0, 1), (1, 0)]).is_err());
        // Out of range.
        assert!(Tree::new(2, vec![(0, 5)]).is_err());
    }

    #[test]
    fn single_vertex_tree_is_valid() {
        let t = Tree::new(1, vec![]).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.degree_sequence().as_slice(), &[0]);
    }

    #[test]
    fn with_root_validates_range() {
        let t = Tree::new(2, vec![(0, 1)]).unwrap();
        assert!(t.clone().with_root(1).is_ok());
        assert!(t.with_root(2).is_err());
    }

    #[test]
    fn graph_allows_cycles_and_checks_connectivity() {
        let c4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_connected());
        let two_parts = SimpleGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!two_parts.is_connected());
    }

    #[test]
    fn with_edge_rejects_existing_and_loops() {
        let g = SimpleGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(g.with_edge(0, 2).is_ok());
        assert!(g.with_edge(1, 0).is_err());
        assert!(g.with_edge(2, 2).is_err());
    }

    #[test]
    fn degree_sequence_realizability() {
        assert!(DegreeSequence::new(vec![0]).unwrap().realizable_as_tree());
        assert!(DegreeSequence::new(vec![1, 1]).unwrap().realizable_as_tree());
        assert!(DegreeSequence::new(vec![2, 1, 2, 1]).unwrap().realizable_as_tree());
        // Sum too large for a tree.
        assert!(!DegreeSequence::new(vec![2, 2, 2]).unwrap().realizable_as_tree());
        assert!(DegreeSequence::new(vec![]).is_err());
        assert!(DegreeSequence::new(vec![0, 1]).is_err());
    }
}
