//! Prüfer codes: the bijection between labeled trees on `n` vertices and
//! sequences of `n − 2` vertex ids. Provides the independent census oracle
//! (every labeled tree reachable by decoding) and the generator for all
//! labeled trees with a prescribed degree sequence (vertex `v` appears
//! exactly `d(v) − 1` times in the code).

use crate::error::{Error, Result};
use crate::graph::tree::{DegreeSequence, Tree};
use rand::Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A Prüfer code for labeled trees on `n ≥ 2` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruferCode {
    n: usize,
    entries: Vec<usize>,
}

impl PruferCode {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("Prüfer codes need n >= 2".into()));
        }
        if entries.len() != n - 2 {
            return Err(Error::Domain(format!(
                "code for n={n} needs {} entries, got {}",
                n - 2,
                entries.len()
            )));
        }
        if let Some(&v) = entries.iter().find(|&&v| v >= n) {
            return Err(Error::Domain(format!("entry {v} out of range for n={n}")));
        }
        Ok(PruferCode { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Uniformly random code, hence a uniformly random labeled tree.
    pub fn random(n: usize, rng: &mut impl Rng) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("Prüfer codes need n >= 2".into()));
        }
        let entries = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        Ok(PruferCode { n, entries })
    }

    /// The labeled tree this code describes. Always the smallest available
    /// leaf is joined to the next code entry, then the last two leaves are
    /// joined to each other.
    pub fn decode(&self) -> Tree {
        let n = self.n;
        let mut degree = vec![1usize; n];
        for &v in &self.entries {
            degree[v] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(Reverse)
            .collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &v in &self.entries {
            let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.push(Reverse(v));
            }
        }
        let Reverse(u) = leaves.pop().expect("two vertices remain");
        let Reverse(w) = leaves.pop().expect("two vertices remain");
        edges.push((u, w));
        Tree::new(n, edges).expect("Prüfer decoding always yields a tree")
    }
}

/// Encode a labeled tree on `n ≥ 2` vertices by repeatedly recording the
/// neighbor of the smallest leaf.
pub fn encode(t: &Tree) -> Result<PruferCode> {
    let n = t.n();
    if n < 2 {
        return Err(Error::Domain("Prüfer codes need n >= 2".into()));
    }
    let adj = t.adjacency();
    let mut degree = t.degrees().to_vec();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut entries = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf] = true;
        let &v = adj[leaf]
            .iter()
            .find(|&&w| !removed[w])
            .expect("a non-removed neighbor exists");
        entries.push(v);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    Ok(PruferCode { n, entries })
}

/// All labeled trees whose degree multiset equals `ds`, with the fixed
/// assignment "vertex `i` gets degree `ds[i]`" (`ds` is sorted
/// non-increasingly). The trees are exactly the decodings of all distinct
/// arrangements of the multiset in which vertex `i` appears `ds[i] − 1`
/// times, visited in lexicographic order.
pub fn labeled_trees_with_degrees(ds: &DegreeSequence) -> Result<DegreeTreeIter> {
    if !ds.realizable_as_tree() {
        return Err(Error::Domain(format!(
            "degree sequence {ds} is not realizable as a tree"
        )));
    }
    let n = ds.len();
    let arrangement = if n == 1 {
        None
    } else {
        let mut a = Vec::with_capacity(n - 2);
        for (v, &d) in ds.as_slice().iter().enumerate() {
            a.extend(std::iter::repeat_n(v, d - 1));
        }
        Some(a)
    };
    Ok(DegreeTreeIter {
        n,
        arrangement,
        single_emitted: false,
    })
}

pub struct DegreeTreeIter {
    n: usize,
    /// Current multiset arrangement; `None` for the single-vertex case or
    /// once the stream is exhausted.
    arrangement: Option<Vec<usize>>,
    single_emitted: bool,
}

impl Iterator for DegreeTreeIter {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.n == 1 {
            if self.single_emitted {
                return None;
            }
            self.single_emitted = true;
            return Some(Tree::new(1, Vec::new()).unwrap());
        }
        let current = self.arrangement.as_mut()?;
        let tree = PruferCode {
            n: self.n,
            entries: current.clone(),
        }
        .decode();
        if !next_permutation(current) {
            self.arrangement = None;
        }
        Some(tree)
    }
}

/// Rearrange into the lexicographically next permutation; `false` when the
/// input was already the last (non-increasing) one.
fn next_permutation(a: &mut [usize]) -> bool {
    let len = a.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
