//! Construction of Kragujevac trees: a central vertex joined to the roots of
//! a chosen multiset of B_k branches.

use crate::error::{Error, Result};
use crate::graph::tree::Tree;

/// Build the Kragujevac tree with one B_k branch per entry of `ks`, rooted at
/// the central vertex (vertex 0).
///
/// Each B_k branch contributes `2k + 1` vertices (its root plus k chains of
/// a degree-2 vertex and a leaf), so the result has `1 + Σ (2k + 1)`
/// vertices and the center has degree `ks.len()`.
///
/// ```
/// use abc_trees::build_kragujevac;
/// let t = build_kragujevac(&[2, 2, 2]).unwrap();
/// assert_eq!(t.n(), 16);
/// assert_eq!(t.degree(0), 3);
/// ```
pub fn build_kragujevac(ks: &[usize]) -> Result<Tree> {
    if ks.is_empty() {
        return Err(Error::Domain(
            "Kragujevac tree needs at least one branch".into(),
        ));
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0) {
        return Err(Error::Domain(format!("branch size must be >= 1, got {k}")));
    }
    let n = 1 + ks.iter().map(|&k| 2 * k + 1).sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &k in ks {
        let root = next;
        next += 1;
        edges.push((0, root));
        for _ in 0..k {
            edges.push((root, next));
            edges.push((next, next + 1));
            next += 2;
        }
    }
    Tree::new(n, edges)?.with_root(0)
}
