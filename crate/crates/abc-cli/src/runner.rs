//! Search drivers. The CLI is the only place that spawns workers: it owns
//! the partition plan and the final merge, and the library workers under
//! it are pure functions of their work range.

use abc_trees::enumerate::{brute_force_min_abc, search_space_size, SearchResult, WorkRange};
use abc_trees::greedy::ds_search_min_abc;
use abc_trees::{minimal_abc_properties, LevelSequence, Tree};
use anyhow::{anyhow, Result};
use serde::{Deserialize, Serialize};

/// The stored slice of a search result.
///
/// Wall-clock time is deliberately left out: payloads must be bit-equal
/// across reruns and across worker counts, and timing never is.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchPayload {
    pub n: usize,
    pub abc_min: f64,
    /// Canonical forms of every minimizer, sorted.
    pub trees: Vec<LevelSequence>,
    pub examined: u64,
    /// `pass`, `fail:<check>`, or `not-applicable` (order below 10).
    pub properties: String,
}

pub fn search_payload(result: &SearchResult) -> SearchPayload {
    SearchPayload {
        n: result.n,
        abc_min: result.abc_min,
        trees: result.trees.clone(),
        examined: u64::try_from(result.examined).expect("desk-scale search count"),
        properties: property_summary(result.n, &result.trees),
    }
}

/// One word summarizing the structural checks over all minimizers.
fn property_summary(n: usize, trees: &[LevelSequence]) -> String {
    if n < 10 {
        return "not-applicable".to_string();
    }
    for seq in trees {
        let report = minimal_abc_properties(&Tree::from_level_sequence(seq));
        if let Some((name, _)) = report.checks.iter().find(|(_, s)| s.is_fail()) {
            return format!("fail:{name}");
        }
    }
    "pass".to_string()
}

/// Exhaustive minimum search, split across `jobs` threads. Every thread
/// scans a contiguous slice of the enumeration; slices merge back in
/// range order, so the result is identical to the single-threaded scan.
pub fn run_brute(n: usize, jobs: usize, force: bool) -> Result<SearchResult> {
    if jobs <= 1 {
        return Ok(brute_force_min_abc(n, None, force)?);
    }
    let total = search_space_size(n)?;
    let ranges = WorkRange::partition(total, jobs);
    let parts: Vec<abc_trees::Result<SearchResult>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| scope.spawn(move || brute_force_min_abc(n, Some(range), force)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker does not panic"))
            .collect()
    });
    let mut merged: Option<SearchResult> = None;
    for part in parts {
        let part = part?;
        merged = Some(match merged {
            None => part,
            Some(acc) => acc.merge(part)?,
        });
    }
    merged.ok_or_else(|| anyhow!("no work to partition for order {n}"))
}

/// Degree-sequence-guided search; intentionally serial (it is already
/// orders of magnitude cheaper than the exhaustive scan).
pub fn run_dsearch(n: usize, force: bool) -> Result<SearchResult> {
    Ok(ds_search_min_abc(n, force)?)
}
