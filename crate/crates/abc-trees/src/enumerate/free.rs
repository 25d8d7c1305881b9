//! Isomorphism-free streaming of all free trees on `n` vertices.
//!
//! Every free tree has either one center or two adjacent centers, and that
//! split drives the generator:
//!
//! * *central* trees are exactly the rooted trees whose root has at least
//!   two child subtrees of maximal depth (rooting a tree at its unique
//!   center produces such a rooted tree, and conversely such a rooted tree
//!   has its center at the root);
//! * *bicentral* trees are exactly the unordered pairs of equal-height
//!   rooted trees joined by an edge between their roots (the central edge).
//!
//! Streaming the rooted-tree generator through those two characterizations
//! therefore emits each isomorphism class of free trees exactly once, in a
//! deterministic order suitable for range partitioning.

use crate::enumerate::rooted::{max_depth_child_blocks, sequence_height, RootedTreeCursor};
use crate::error::{Error, Result};
use crate::graph::canonical::LevelSequence;
use crate::graph::tree::Tree;

/// Stream of all free trees on `n` vertices, one representative per
/// isomorphism class. Emission order: the single central-rooted stream
/// first, then bicentral trees grouped by the size of the larger half.
pub struct FreeTreeCursor {
    n: usize,
    phase: Phase,
}

enum Phase {
    /// n = 1 only.
    Single,
    Central {
        inner: RootedTreeCursor,
    },
    Bicentral {
        /// Size of the `A` half, from `ceil(n/2)` up to `n - 1`.
        m: usize,
        a: RootedTreeCursor,
        /// Current `A` sequence (paired against `b_pool[b_next..]`).
        a_current: Option<(Vec<usize>, usize)>,
        /// Index of `a_current` within its stream, for the equal-halves rule.
        a_index: usize,
        /// All rooted trees on `n - m` vertices with their heights.
        b_pool: Vec<(Vec<usize>, usize)>,
        b_next: usize,
    },
    Done,
}

impl FreeTreeCursor {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("free trees need at least 1 vertex".into()));
        }
        let phase = if n == 1 {
            Phase::Single
        } else {
            Phase::Central {
                inner: RootedTreeCursor::new(n)?,
            }
        };
        Ok(FreeTreeCursor { n, phase })
    }

    /// Advance to the next tree, returning its undecoded description.
    fn advance(&mut self) -> Option<Item> {
        loop {
            match &mut self.phase {
                Phase::Single => {
                    self.phase = Phase::Done;
                    return Some(Item::Single);
                }
                Phase::Central { inner } => {
                    while inner.step() {
                        let seq = inner.current().unwrap();
                        if max_depth_child_blocks(seq) >= 2 {
                            return Some(Item::Central(seq.to_vec()));
                        }
                    }
                    self.phase = Self::bicentral_phase(self.n, self.n.div_ceil(2));
                }
                Phase::Bicentral {
                    m,
                    a,
                    a_current,
                    a_index,
                    b_pool,
                    b_next,
                } => {
                    // Emit the pending (A, B) pair if one is lined up.
                    if let Some((a_seq, a_height)) = a_current {
                        while *b_next < b_pool.len() {
                            let (b_seq, b_height) = &b_pool[*b_next];
                            *b_next += 1;
                            if b_height == a_height {
                                return Some(Item::Glued {
                                    a: a_seq.clone(),
                                    b: b_seq.clone(),
                                });
                            }
                        }
                    }
                    // Next A; for equal halves only pair B at or after A's
                    // own stream position so unordered pairs appear once.
                    if a.step() {
                        let seq = a.current().unwrap();
                        let h = sequence_height(seq);
                        *a_current = Some((seq.to_vec(), h));
                        // Before the increment, `a_index` is this A's own
                        // 0-based stream position.
                        *b_next = if 2 * *m == self.n { *a_index } else { 0 };
                        *a_index += 1;
                    } else if *m + 1 < self.n {
                        self.phase = Self::bicentral_phase(self.n, *m + 1);
                    } else {
                        self.phase = Phase::Done;
                    }
                }
                Phase::Done => return None,
            }
        }
    }

    fn bicentral_phase(n: usize, m: usize) -> Phase {
        if m >= n {
            return Phase::Done;
        }
        let b_pool = RootedTreeCursor::new(n - m)
            .expect("n - m >= 1")
            .map(|s| {
                let v = s.as_slice().to_vec();
                let h = sequence_height(&v);
                (v, h)
            })
            .collect();
        Phase::Bicentral {
            m,
            a: RootedTreeCursor::new(m).expect("m >= 1"),
            a_current: None,
            a_index: 0,
            b_pool,
            b_next: 0,
        }
    }

    /// Skip `count` trees without decoding them into `Tree` values.
    /// Returns the number actually skipped (less than `count` only if the
    /// stream ended).
    pub fn skip_trees(&mut self, count: u128) -> u128 {
        let mut skipped = 0u128;
        while skipped < count {
            if self.advance().is_none() {
                break;
            }
            skipped += 1;
        }
        skipped
    }
}

enum Item {
    Single,
    Central(Vec<usize>),
    Glued { a: Vec<usize>, b: Vec<usize> },
}

impl Iterator for FreeTreeCursor {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.advance().map(|item| match item {
            Item::Single => Tree::new(1, Vec::new()).unwrap(),
            Item::Central(seq) => {
                let seq = LevelSequence::new(seq).expect("generator emits valid sequences");
                Tree::from_level_sequence(&seq)
            }
            Item::Glued { a, b } => glue(&a, &b),
        })
    }
}

/// Join two rooted trees (given as depth sequences) by an edge between
/// their roots. `A` keeps vertex ids `0..a.len()`, `B` is shifted up.
fn glue(a: &[usize], b: &[usize]) -> Tree {
    let n = a.len() + b.len();
    let mut edges = Vec::with_capacity(n - 1);
    for (offset, seq) in [(0, a), (a.len(), b)] {
        let mut stack: Vec<usize> = Vec::new();
        for (i, &d) in seq.iter().enumerate() {
            let v = offset + i;
            stack.truncate(d);
            if d > 0 {
                edges.push((stack[d - 1], v));
            }
            stack.push(v);
        }
    }
    edges.push((0, a.len()));
    Tree::new(n, edges).expect("gluing two rooted trees yields a tree")
}

/// All free trees on `n` vertices, exactly one per isomorphism class.
pub fn free_trees(n: usize) -> Result<FreeTreeCursor> {
    FreeTreeCursor::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::counts::free_tree_count;
    use crate::graph::canonical::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn tiny_streams() {
        assert_eq!(free_trees(1).unwrap().count(), 1);
        assert_eq!(free_trees(2).unwrap().count(), 1);
        assert_eq!(free_trees(3).unwrap().count(), 1);
        assert_eq!(free_trees(4).unwrap().count(), 2);
        assert_eq!(free_trees(7).unwrap().count(), 11);
        assert_eq!(free_trees(10).unwrap().count(), 106);
    }

    #[test]
    fn counts_match_recurrence_up_to_16() {
        for n in 1..=16 {
            let generated = free_trees(n).unwrap().count() as u128;
            assert_eq!(generated, free_tree_count(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn stream_is_isomorphism_free_up_to_12() {
        for n in 1..=12 {
            let mut seen = HashSet::new();
            for t in free_trees(n).unwrap() {
                assert_eq!(t.n(), n);
                let form = canonical_form(&t);
                assert!(
                    seen.insert(form.as_slice().to_vec()),
                    "duplicate isomorphism class at n={n}"
                );
            }
        }
    }

    #[test]
    fn skip_matches_iteration() {
        let total = free_tree_count(9).unwrap();
        for start in [0u128, 1, 13, 25, 46, 47] {
            let mut skipped = free_trees(9).unwrap();
            assert_eq!(skipped.skip_trees(start), start.min(total));
            let rest: Vec<_> = skipped.map(|t| canonical_form(&t)).collect();
            let direct: Vec<_> = free_trees(9)
                .unwrap()
                .skip(start as usize)
                .map(|t| canonical_form(&t))
                .collect();
            assert_eq!(rest, direct, "start={start}");
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(free_trees(0).is_err());
    }
}
