//! Canonical forms: centers, level sequences, and an isomorphism-complete
//! encoding of free trees.

use crate::error::{Error, Result};
use crate::graph::tree::Tree;

/// The center of a tree: one vertex (even diameter) or two adjacent vertices
/// (odd diameter).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    One(usize),
    Two(usize, usize),
}

/// Center(s) of a tree, found by repeatedly stripping leaves.
pub fn tree_center(t: &Tree) -> Center {
    let n = t.n();
    if n == 1 {
        return Center::One(0);
    }
    let adj = t.adjacency();
    let mut degree: Vec<usize> = t.degrees().to_vec();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            remaining -= 1;
            for &w in &adj[leaf] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    match rest.as_slice() {
        [c] => Center::One(*c),
        [a, b] => Center::Two(*a, *b),
        _ => unreachable!("leaf stripping always leaves one or two vertices"),
    }
}

/// A preorder depth listing of a rooted tree: entry 0 is the root at depth 0,
/// each later entry is at depth at most one more than its predecessor and at
/// least 1. Canonical forms returned by [`canonical_form`] list the subtrees
/// of every vertex in non-increasing lexicographic order, which makes the
/// sequence a complete isomorphism invariant for the chosen rooting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Domain("empty level sequence".into()));
        }
        if seq[0] != 0 {
            return Err(Error::Domain("level sequence must start at depth 0".into()));
        }
        for i in 1..seq.len() {
            if seq[i] == 0 || seq[i] > seq[i - 1] + 1 {
                return Err(Error::Domain(format!(
                    "level sequence entry {i} = {} breaks the depth contract",
                    seq[i]
                )));
            }
        }
        Ok(LevelSequence(seq))
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
}

impl std::fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl std::str::FromStr for LevelSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut seq = Vec::new();
        for tok in s.split_whitespace() {
            let d: usize = tok.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid level-sequence entry {tok:?}"),
            })?;
            seq.push(d);
        }
        LevelSequence::new(seq)
    }
}

// Serialized as the canonical text form ("0 1 2 1"), which keeps JSON
// records human-readable and reuses the validated parser on the way in.
impl serde::Serialize for LevelSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LevelSequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Tree {
    /// Decode a level sequence into a tree rooted at vertex 0: each vertex's
    /// parent is the most recent vertex one level shallower.
    pub fn from_level_sequence(seq: &LevelSequence) -> Tree {
        let s = seq.as_slice();
        let n = s.len();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        // stack[d] = latest vertex seen at depth d.
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        for (v, &d) in s.iter().enumerate() {
            stack.truncate(d);
            if d > 0 {
                edges.push((stack[d - 1], v));
            }
            stack.push(v);
        }
        Tree::new(n, edges)
            .expect("a valid level sequence always decodes to a tree")
            .with_root(0)
            .unwrap()
    }
}

/// Canonical preorder depth sequence of the subtree at `v` (depths relative
/// to `v`), with child blocks sorted in non-increasing lexicographic order.
/// That ordering yields the lexicographically largest preorder sequence for
/// the subtree, so equal outputs mean isomorphic rooted subtrees.
fn canonical_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<usize> {
    let mut blocks: Vec<Vec<usize>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| canonical_rooted(adj, w, v))
        .collect();
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    let mut seq = Vec::with_capacity(1 + blocks.iter().map(Vec::len).sum::<usize>());
    seq.push(0);
    for block in blocks {
        seq.extend(block.into_iter().map(|d| d + 1));
    }
    seq
}

/// Center-rooted canonical level sequence. Two trees get equal forms exactly
/// when they are isomorphic: the rooting is pinned to the center, and for
/// bicentral trees the lexicographically smaller of the two candidate
/// rootings is kept.
pub fn canonical_form(t: &Tree) -> LevelSequence {
    let adj = t.adjacency();
    let seq = match tree_center(t) {
        Center::One(c) => canonical_rooted(&adj, c, usize::MAX),
        Center::Two(a, b) => {
            let sa = canonical_rooted(&adj, a, usize::MAX);
            let sb = canonical_rooted(&adj, b, usize::MAX);
            if sa <= sb {
                sa
            } else {
                sb
            }
        }
    };
    LevelSequence::new(seq).expect("canonical traversal yields a valid level sequence")
}
