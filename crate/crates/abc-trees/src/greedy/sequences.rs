//! Candidate degree sequences for trees of a given order, optionally pruned
//! to the shapes a minimal-ABC tree can take.
//!
//! The pruning rule: in a minimal tree of order ≥ 10 every leaf heads a
//! pendant path of length 2 or 3, at most one path has length 3, and there
//! are no internal paths. Degree-2 vertices are therefore exactly the
//! pendant-path interiors, so their count equals the leaf count or exceeds
//! it by one, and every other internal vertex has degree ≥ 3.

use crate::error::{Error, Result};
use crate::graph::tree::DegreeSequence;

/// A candidate degree sequence with its composition by degree class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DsCandidate {
    pub ds: DegreeSequence,
    /// Number of degree-1 vertices.
    pub leaves: usize,
    /// Number of degree-2 vertices.
    pub deg2: usize,
    /// Number of vertices of degree ≥ 3.
    pub internal: usize,
}

impl DsCandidate {
    fn from_ds(ds: DegreeSequence) -> Self {
        let leaves = ds.count_of(1);
        let deg2 = ds.count_of(2);
        let internal = ds.len() - leaves - deg2;
        DsCandidate {
            ds,
            leaves,
            deg2,
            internal,
        }
    }

    /// Whether the sequence satisfies the minimal-tree pruning rule: the
    /// degree-2 count equals the leaf count or exceeds it by exactly one.
    pub fn satisfies_pruning(&self) -> bool {
        self.deg2 == self.leaves || self.deg2 == self.leaves + 1
    }
}

/// All candidate degree sequences for trees on `n` vertices, in a fixed
/// deterministic order.
///
/// Unpruned (any `n ≥ 2`): every partition of `2(n−1)` into `n` positive
/// parts. Pruned (`n ≥ 10` only): the leaf/degree-2 balance described in
/// the module docs.
pub fn degree_sequences(n: usize, prune: bool) -> Result<Vec<DsCandidate>> {
    if prune {
        pruned(n)
    } else {
        unpruned(n)
    }
}

fn unpruned(n: usize) -> Result<Vec<DsCandidate>> {
    if n < 2 {
        return Err(Error::Domain(
            "degree sequences need at least 2 vertices".into(),
        ));
    }
    let parts = partitions_exact(2 * (n - 1), n, n - 1, 1);
    Ok(parts
        .into_iter()
        .map(|p| DsCandidate::from_ds(DegreeSequence::new(p).expect("positive parts")))
        .collect())
}

fn pruned(n: usize) -> Result<Vec<DsCandidate>> {
    if n < 10 {
        return Err(Error::Domain(format!(
            "pruned degree sequences assume order >= 10, got {n}"
        )));
    }
    let mut out = Vec::new();
    for leaves in 2..n {
        for extra in 0..=1usize {
            let deg2 = leaves + extra;
            if leaves + deg2 >= n {
                continue;
            }
            let internal = n - leaves - deg2;
            let internal_sum = 2 * (n - 1) - leaves - 2 * deg2;
            for hubs in partitions_exact(internal_sum, internal, n - 1, 3) {
                let mut degs = hubs;
                degs.extend(std::iter::repeat_n(2, deg2));
                degs.extend(std::iter::repeat_n(1, leaves));
                out.push(DsCandidate::from_ds(
                    DegreeSequence::new(degs).expect("positive parts"),
                ));
            }
        }
    }
    Ok(out)
}

/// Partitions of `sum` into exactly `parts` parts, each in
/// `[min_part, max_part]`, as non-increasing vectors in decreasing
/// lexicographic order.
fn partitions_exact(sum: usize, parts: usize, max_part: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(parts);
    fill(sum, parts, max_part, min_part, &mut prefix, &mut out);
    out
}

fn fill(
    sum: usize,
    parts: usize,
    max_part: usize,
    min_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if parts == 0 {
        if sum == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // The first part is at least the average (ceiling) and leaves at least
    // min_part for each remaining slot.
    if sum < min_part * parts {
        return;
    }
    let hi = max_part.min(sum - min_part * (parts - 1));
    let lo = min_part.max(sum.div_ceil(parts));
    for p in (lo..=hi).rev() {
        prefix.push(p);
        fill(sum - p, parts - 1, p, min_part, prefix, out);
        prefix.pop();
    }
}
