//! Counting recurrences for rooted and free trees.
//!
//! These counts come from a divisor-sum recurrence that is independent of
//! the generators in this module, so they double as a census cross-check:
//! the cursors must emit exactly `rooted_tree_count(n)` and
//! `free_tree_count(n)` items.

use crate::error::{Error, Result};

/// Number of rooted trees on `1..=n` vertices, indexed by vertex count
/// (entry 0 is unused and set to 0).
///
/// Uses the recurrence
/// `(n) * t(n+1) = sum_{k=1..n} (sum_{d | k} d * t(d)) * t(n-k+1)`.
pub fn rooted_tree_counts(n: usize) -> Result<Vec<u128>> {
    if n == 0 {
        return Err(Error::Domain("tree counts need n >= 1".into()));
    }
    let mut t = vec![0u128; n + 1];
    t[1] = 1;
    // s[k] = sum over divisors d of k of d * t(d), filled as t becomes known.
    let mut s = vec![0u128; n + 1];
    for m in 2..=n {
        // t[m-1] is final; fold it into every s[k] with (m-1) | k.
        let d = m - 1;
        let mut k = d;
        while k <= n {
            s[k] += (d as u128) * t[d];
            k += d;
        }
        let mut acc = 0u128;
        for k in 1..m {
            acc += s[k] * t[m - k];
        }
        t[m] = acc / (m as u128 - 1);
    }
    Ok(t)
}

/// Number of rooted trees on exactly `n` vertices.
pub fn rooted_tree_count(n: usize) -> Result<u128> {
    Ok(*rooted_tree_counts(n)?.last().unwrap())
}

/// Number of free (unrooted, unlabeled) trees on exactly `n` vertices:
/// rooted count minus the overcount from re-rooting, i.e.
/// `t(n) - sum_{i < n/2} t(i) t(n-i) - (n even ? C(t(n/2), 2) : 0)`.
pub fn free_tree_count(n: usize) -> Result<u128> {
    let t = rooted_tree_counts(n)?;
    let mut f = t[n];
    for i in 1..=(n - 1) / 2 {
        f -= t[i] * t[n - i];
    }
    if n.is_multiple_of(2) {
        let half = t[n / 2];
        f -= half * (half - 1) / 2;
    }
    Ok(f)
}
