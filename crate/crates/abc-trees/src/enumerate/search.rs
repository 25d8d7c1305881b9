//! Brute-force minimum-ABC search over the free-tree stream, with
//! deterministic range partitioning for parallel runs.

use crate::enumerate::counts::free_tree_count;
use crate::enumerate::free::free_trees;
use crate::error::{Error, Result};
use crate::graph::abc::{abc_from_parts, ABC_EQ_TOL};
use crate::graph::canonical::{canonical_form, LevelSequence};
use serde::{Deserialize, Serialize};

/// Largest order scanned exhaustively without an explicit override.
pub const BRUTE_CAP: usize = 20;

/// A contiguous slice `[start, end)` of the free-tree generation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkRange {
    pub start: u128,
    pub end: u128,
}

impl WorkRange {
    pub fn new(start: u128, end: u128) -> Result<Self> {
        if start > end {
            return Err(Error::Domain(format!(
                "work range start {start} exceeds end {end}"
            )));
        }
        Ok(WorkRange { start, end })
    }

    /// Split `[0, total)` into `parts` contiguous ranges of near-equal size.
    pub fn partition(total: u128, parts: usize) -> Vec<WorkRange> {
        let parts = parts.max(1) as u128;
        let base = total / parts;
        let extra = total % parts;
        let mut ranges = Vec::with_capacity(parts as usize);
        let mut start = 0u128;
        for i in 0..parts {
            let len = base + u128::from(i < extra);
            ranges.push(WorkRange {
                start,
                end: start + len,
            });
            start += len;
        }
        ranges
    }
}

/// Outcome of a (possibly partial) minimum search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    /// Minimal ABC value seen in the scanned slice.
    pub abc_min: f64,
    /// Canonical forms of all trees within `1e-12` of `abc_min`, sorted.
    pub trees: Vec<LevelSequence>,
    /// Number of trees scanned.
    pub examined: u128,
    /// Wall-clock seconds spent scanning (summed over merged slices).
    pub seconds: f64,
}

impl SearchResult {
    fn empty(n: usize) -> Self {
        SearchResult {
            n,
            abc_min: f64::INFINITY,
            trees: Vec::new(),
            examined: 0,
            seconds: 0.0,
        }
    }

    /// Merge with a result for a disjoint slice of the same search:
    /// minimum of minima, union of surviving ties, sums of counters.
    /// Associative and commutative up to the final sort, so any partition
    /// of the scan reproduces the unpartitioned result.
    pub fn merge(mut self, other: SearchResult) -> Result<SearchResult> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "cannot merge searches for n={} and n={}",
                self.n, other.n
            )));
        }
        let min = self.abc_min.min(other.abc_min);
        let mut trees = std::mem::take(&mut self.trees);
        trees.extend(other.trees);
        let mut kept: Vec<LevelSequence> = Vec::new();
        // Re-fetch each candidate's value instead of storing it: ties are
        // rare, so recomputing keeps the record format minimal.
        for form in trees {
            if value_of(&form) <= min + ABC_EQ_TOL {
                kept.push(form);
            }
        }
        kept.sort_unstable_by(|a, b| a.as_slice().cmp(b.as_slice()));
        kept.dedup();
        Ok(SearchResult {
            n: self.n,
            abc_min: min,
            trees: kept,
            examined: self.examined + other.examined,
            seconds: self.seconds + other.seconds,
        })
    }
}

fn value_of(form: &LevelSequence) -> f64 {
    let t = crate::graph::tree::Tree::from_level_sequence(form);
    abc_from_parts(t.degrees(), t.edges())
}

/// Exhaustively scan free trees of order `n` (or just `range` of the
/// generation order) for the minimal ABC index, keeping every minimizer
/// within `1e-12` of the minimum.
///
/// Orders above [`BRUTE_CAP`] are refused unless `force` is set; orders
/// below 4 are rejected (nothing to search).
pub fn brute_force_min_abc(n: usize, range: Option<WorkRange>, force: bool) -> Result<SearchResult> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "brute-force search needs n >= 4, got {n}"
        )));
    }
    if n > BRUTE_CAP && !force {
        return Err(Error::CapExceeded(format!(
            "brute-force search capped at n={BRUTE_CAP} (requested {n}); pass force to override"
        )));
    }
    let started = std::time::Instant::now();
    let mut cursor = free_trees(n)?;
    let limit = match range {
        Some(r) => {
            cursor.skip_trees(r.start);
            r.end - r.start
        }
        None => u128::MAX,
    };

    let mut result = SearchResult::empty(n);
    let mut min = f64::INFINITY;
    // (canonical form, value) for every survivor within tolerance of `min`.
    let mut ties: Vec<(LevelSequence, f64)> = Vec::new();
    while result.examined < limit {
        let Some(t) = cursor.next() else { break };
        result.examined += 1;
        let value = abc_from_parts(t.degrees(), t.edges());
        if value < min {
            min = value;
            ties.retain(|(_, v)| *v <= min + ABC_EQ_TOL);
        }
        if value <= min + ABC_EQ_TOL {
            ties.push((canonical_form(&t), value));
        }
    }
    ties.retain(|(_, v)| *v <= min + ABC_EQ_TOL);
    result.abc_min = min;
    result.trees = ties.into_iter().map(|(f, _)| f).collect();
    result
        .trees
        .sort_unstable_by(|a, b| a.as_slice().cmp(b.as_slice()));
    result.trees.dedup();
    result.seconds = started.elapsed().as_secs_f64();
    Ok(result)
}

/// Total number of trees a full scan of order `n` visits; the domain for
/// [`WorkRange`] partitioning.
pub fn search_space_size(n: usize) -> Result<u128> {
    free_tree_count(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical::canonical_form;
    use crate::graph::tree::Tree;

    #[test]
    fn minimum_for_n4_is_the_path() {
        let r = brute_force_min_abc(4, None, false).unwrap();
        assert_eq!(r.examined, 2);
        assert!((r.abc_min - 3.0 / 2f64.sqrt()).abs() < 1e-12);
        let p4 = Tree::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(r.trees, vec![canonical_form(&p4)]);
    }

    #[test]
    fn minimum_for_n5_is_the_path() {
        let r = brute_force_min_abc(5, None, false).unwrap();
        assert_eq!(r.examined, 3);
        assert!((r.abc_min - 4.0 / 2f64.sqrt()).abs() < 1e-12);
        let p5 = Tree::new(5, (0..4).map(|i| (i, i + 1)).collect()).unwrap();
        assert_eq!(r.trees, vec![canonical_form(&p5)]);
    }

    #[test]
    fn partition_reproduces_full_scan() {
        for n in [8usize, 11, 14] {
            let full = brute_force_min_abc(n, None, false).unwrap();
            assert_eq!(full.examined, search_space_size(n).unwrap());
            for parts in [2usize, 3, 7] {
                let ranges = WorkRange::partition(full.examined, parts);
                let mut merged = SearchResult::empty(n);
                for r in ranges {
                    let part = brute_force_min_abc(n, Some(r), false).unwrap();
                    merged = merged.merge(part).unwrap();
                }
                assert_eq!(merged.examined, full.examined, "n={n} parts={parts}");
                assert_eq!(merged.abc_min, full.abc_min);
                assert_eq!(merged.trees, full.trees);
            }
        }
    }

    #[test]
    fn range_validation_and_caps() {
        assert!(WorkRange::new(3, 2).is_err());
        assert!(brute_force_min_abc(3, None, false).is_err());
        assert!(matches!(
            brute_force_min_abc(21, None, false),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn partition_covers_domain() {
        let ranges = WorkRange::partition(10, 3);
        assert_eq!(
            ranges,
            vec![
                WorkRange { start: 0, end: 4 },
                WorkRange { start: 4, end: 7 },
                WorkRange { start: 7, end: 10 },
            ]
        );
    }

    #[test]
    fn listed_trees_attain_the_minimum() {
        let r = brute_force_min_abc(12, None, false).unwrap();
        for form in &r.trees {
            assert!((super::value_of(form) - r.abc_min).abs() <= ABC_EQ_TOL);
        }
    }
}
