//! Streaming generation of all rooted trees on a fixed number of vertices.
//!
//! Trees are represented by their canonical preorder depth sequences (root
//! depth 0, child blocks in non-increasing lexicographic order, which makes
//! the canonical sequence the lexicographically largest one). The successor
//! rule rewrites only a suffix, so generation runs in constant amortized
//! time and the stream needs no memory of previous trees.

use crate::error::{Error, Result};
use crate::graph::canonical::LevelSequence;

/// Cursor over all canonical depth sequences of rooted trees on `m`
/// vertices, in decreasing lexicographic order: from the path
/// `[0, 1, ..., m-1]` down to the star `[0, 1, 1, ..., 1]`.
pub struct RootedTreeCursor {
    seq: Vec<usize>,
    state: State,
}

#[derive(PartialEq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl RootedTreeCursor {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("rooted trees need at least 1 vertex".into()));
        }
        Ok(RootedTreeCursor {
            seq: (0..m).collect(),
            state: State::Fresh,
        })
    }

    /// Advance to the next canonical sequence; `false` when exhausted.
    ///
    /// Successor rule: let `p` be the last position of depth ≥ 2 (if none,
    /// the star has been reached and the stream ends) and `q` the last
    /// position before `p` of depth exactly `depth(p) − 1`, i.e. the parent
    /// of `p`. The suffix from `p` is replaced by copies of the block
    /// starting at `q`, which yields the lexicographically largest sequence
    /// smaller than the current one.
    fn advance(&mut self) -> bool {
        let seq = &mut self.seq;
        let p = match seq.iter().rposition(|&d| d >= 2) {
            Some(p) => p,
            None => return false,
        };
        let target = seq[p] - 1;
        let q = seq[..p]
            .iter()
            .rposition(|&d| d == target)
            .expect("parent depth must occur before p in a valid sequence");
        let shift = p - q;
        for i in p..seq.len() {
            seq[i] = seq[i - shift];
        }
        true
    }

    /// Current sequence without allocating a `LevelSequence`.
    pub fn current(&self) -> Option<&[usize]> {
        match self.state {
            State::Done => None,
            _ => Some(&self.seq),
        }
    }

    /// Step the cursor and report whether a new current sequence exists.
    /// Separated from `Iterator::next` so callers can inspect `current()`
    /// (e.g. to filter by height) without cloning every sequence.
    pub fn step(&mut self) -> bool {
        match self.state {
            State::Fresh => {
                self.state = State::Running;
                true
            }
            State::Running => {
                if self.advance() {
                    true
                } else {
                    self.state = State::Done;
                    false
                }
            }
            State::Done => false,
        }
    }
}

impl Iterator for RootedTreeCursor {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        if self.step() {
            Some(
                LevelSequence::new(self.seq.clone())
                    .expect("successor rule preserves validity"),
            )
        } else {
            None
        }
    }
}

/// Height (maximum depth) of a canonical depth sequence.
pub fn sequence_height(seq: &[usize]) -> usize {
    // The first root-child block is the deepest one, and within it depths
    // increase by at most 1 per step, so the maximum is still a scan; keep
    // it simple.
    seq.iter().copied().max().unwrap_or(0)
}

/// Number of root-child subtrees whose height equals the overall height.
/// A rooted tree is the center-rooting of a free tree exactly when this is
/// at least 2 (or the tree is a single vertex).
pub fn max_depth_child_blocks(seq: &[usize]) -> usize {
    let h = sequence_height(seq);
    if h == 0 {
        return 0;
    }
    let mut blocks = 0;
    let mut block_has_max = false;
    for &d in &seq[1..] {
        if d == 1 {
            blocks += usize::from(block_has_max);
            block_has_max = false;
        }
        if d == h {
            block_has_max = true;
        }
    }
    blocks + usize::from(block_has_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::counts::rooted_tree_count;

    fn all(m: usize) -> Vec<Vec<usize>> {
        RootedTreeCursor::new(m)
            .unwrap()
            .map(|s| s.as_slice().to_vec())
            .collect()
    }

    #[test]
    fn smallest_streams() {
        assert_eq!(all(1), vec![vec![0]]);
        assert_eq!(all(2), vec![vec![0, 1]]);
        assert_eq!(all(3), vec![vec![0, 1, 2], vec![0, 1, 1]]);
    }

    #[test]
    fn four_vertices_in_decreasing_lex_order() {
        assert_eq!(
            all(4),
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1, 2, 2],
                vec![0, 1, 2, 1],
                vec![0, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn counts_match_recurrence() {
        for m in 1..=13 {
            let generated = RootedTreeCursor::new(m).unwrap().count() as u128;
            assert_eq!(generated, rooted_tree_count(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn stream_is_strictly_decreasing_and_valid() {
        let mut prev: Option<Vec<usize>> = None;
        for seq in RootedTreeCursor::new(9).unwrap() {
            let v = seq.as_slice().to_vec();
            if let Some(p) = &prev {
                assert!(*p > v, "not decreasing: {p:?} then {v:?}");
            }
            prev = Some(v);
        }
    }

    #[test]
    fn max_depth_blocks() {
        assert_eq!(max_depth_child_blocks(&[0, 1, 2, 3]), 1);
        assert_eq!(max_depth_child_blocks(&[0, 1, 2, 1, 2]), 2);
        assert_eq!(max_depth_child_blocks(&[0, 1, 1, 1]), 3);
        assert_eq!(max_depth_child_blocks(&[0, 1, 2, 2, 1]), 1);
        assert_eq!(max_depth_child_blocks(&[0]), 0);
    }

    #[test]
    fn rejects_zero() {
        assert!(RootedTreeCursor::new(0).is_err());
    }
}
