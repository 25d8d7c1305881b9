//! The atom-bond connectivity index and its edge-weight function.

use crate::error::{Error, Result};
use crate::graph::tree::{SimpleGraph, Tree};

/// Tolerance for deciding that two ABC values are equal. Values farther apart
/// than this are treated as genuinely different; ties in searches are retained
/// up to this width.
pub const ABC_EQ_TOL: f64 = 1e-12;

/// Raw edge-weight `sqrt((x + y - 2) / (x * y))` without domain checks.
/// Callers must guarantee `x >= 1` and `y >= 1`.
#[inline]
pub(crate) fn weight_unchecked(x: f64, y: f64) -> f64 {
    debug_assert!(x >= 1.0 && y >= 1.0);
    ((x + y - 2.0) / (x * y)).sqrt()
}

/// Weight contributed by an edge whose endpoints have degrees `x` and `y`:
/// `sqrt((x + y - 2) / (x * y))`.
///
/// Real-valued arguments are permitted (the monotonicity analysis evaluates
/// the function between integers), but both must be at least 1 so the
/// radicand stays non-negative. Useful identities:
///
/// * `edge_weight(1.0, 1.0) == 0.0` — the single edge of the 2-vertex path;
/// * `edge_weight(2.0, k)` equals `1/sqrt(2)` for every `k >= 1`, exactly in
///   floating point, because `(2 + k - 2) / (2k)` divides to exactly `0.5`.
pub fn edge_weight(x: f64, y: f64) -> Result<f64> {
    if x.is_nan() || y.is_nan() || x < 1.0 || y < 1.0 {
        return Err(Error::Domain(format!(
            "edge_weight requires both arguments >= 1, got ({x}, {y})"
        )));
    }
    Ok(weight_unchecked(x, y))
}

/// Pairwise (tree-reduction) summation. With a fixed input order this is
/// bit-reproducible and keeps rounding error at `O(log n)` ulps.
fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// ABC value of the list of edges given per-vertex degrees. The edge list must
/// already be sorted; the fixed order plus pairwise summation makes the result
/// bit-reproducible across runs and worker counts.
pub(crate) fn abc_from_parts(degrees: &[usize], edges: &[(usize, usize)]) -> f64 {
    let weights: Vec<f64> = edges
        .iter()
        .map(|&(u, v)| weight_unchecked(degrees[u] as f64, degrees[v] as f64))
        .collect();
    pairwise_sum(&weights)
}

/// An ABC index value together with a note about what was scored.
#[derive(Debug, Clone, PartialEq)]
pub struct AbcValue {
    pub value: f64,
    /// Which graph the value scores, e.g. `"tree(n=10)"`.
    pub provenance: String,
}

/// Anything that exposes a sorted edge list with degrees can be scored.
pub trait EdgeList {
    fn degrees(&self) -> &[usize];
    fn sorted_edges(&self) -> &[(usize, usize)];
    fn describe(&self) -> String;
}

impl EdgeList for Tree {
    fn degrees(&self) -> &[usize] {
        Tree::degrees(self)
    }
    fn sorted_edges(&self) -> &[(usize, usize)] {
        self.edges()
    }
    fn describe(&self) -> String {
        format!("tree(n={})", self.n())
    }
}

impl EdgeList for SimpleGraph {
    fn degrees(&self) -> &[usize] {
        SimpleGraph::degrees(self)
    }
    fn sorted_edges(&self) -> &[(usize, usize)] {
        self.edges()
    }
    fn describe(&self) -> String {
        format!("graph(n={}, m={})", self.n(), self.edges().len())
    }
}

/// The ABC index: the sum of [`edge_weight`] over all edges.
///
/// Every vertex must have positive degree (an isolated vertex has no
/// well-defined contribution), so the single-vertex tree is rejected.
/// Summation runs over the sorted edge list with pairwise reduction, making
/// the value bit-reproducible for a given graph.
pub fn abc_index<G: EdgeList>(g: &G) -> Result<AbcValue> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(Error::Domain(format!(
            "vertex {v} is isolated; the ABC index needs positive degrees"
        )));
    }
    Ok(AbcValue {
        value: abc_from_parts(g.degrees(), g.sorted_edges()),
        provenance: g.describe(),
    })
}

/// Change of the ABC index caused by adding the chord `uv` to a connected
/// graph. Recomputes both sides exactly (the new edge changes the degrees of
/// `u` and `v`, hence the weight of every edge incident to them).
pub fn edge_addition_delta(g: &SimpleGraph, u: usize, v: usize) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "edge_addition_delta requires a connected graph".into(),
        ));
    }
    let after = g.with_edge(u, v)?;
    Ok(abc_index(&after)?.value - abc_index(g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_half() -> f64 {
        0.5f64.sqrt()
    }

    #[test]
    fn weight_identities() {
        assert_eq!(edge_weight(1.0, 1.0).unwrap(), 0.0);
        // (4, 4): sqrt(6/16) = sqrt(6)/4 by direct substitution.
        assert!((edge_weight(4.0, 4.0).unwrap() - 6f64.sqrt() / 4.0).abs() < 1e-15);
        // Symmetry on a small grid.
        for x in 1..=12 {
            for y in 1..=12 {
                let a = edge_weight(x as f64, y as f64).unwrap();
                let b = edge_weight(y as f64, x as f64).unwrap();
                assert_eq!(a, b, "symmetry failed at ({x}, {y})");
            }
        }
    }

    #[test]
    fn degree_two_edges_always_weigh_sqrt_half() {
        // Exact in floating point: (2 + k - 2) / (2k) divides to exactly 0.5.
        let mut k = 1u64;
        while k <= 1_000_000 {
            let w = edge_weight(2.0, k as f64).unwrap();
            assert!(
                (w - sqrt_half()).abs() < 1e-15,
                "edge_weight(2, {k}) deviated from sqrt(1/2)"
            );
            k = if k < 1000 { k + 1 } else { k * 7 / 3 };
        }
    }

    #[test]
    fn weight_rejects_out_of_domain() {
        assert!(edge_weight(0.0, 3.0).is_err());
        assert!(edge_weight(2.0, -1.0).is_err());
        assert!(edge_weight(0.5, 10.0).is_err());
        assert!(edge_weight(f64::NAN, 2.0).is_err());
    }

    #[test]
    fn abc_of_small_trees() {
        let p2 = Tree::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(abc_index(&p2).unwrap().value, 0.0);

        let p10 = Tree::new(10, (0..9).map(|i| (i, i + 1)).collect()).unwrap();
        assert!((abc_index(&p10).unwrap().value - 9.0 * sqrt_half()).abs() < 1e-12);

        // Star on 5 vertices: 4 edges of weight sqrt(3)/2, total 2*sqrt(3).
        let s5 = Tree::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!((abc_index(&s5).unwrap().value - 2.0 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn path_identity_up_to_n_1000() {
        for n in [3usize, 4, 10, 77, 500, 1000] {
            let p = Tree::new(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap();
            let expected = (n - 1) as f64 / 2f64.sqrt();
            assert!(
                (abc_index(&p).unwrap().value - expected).abs() < ABC_EQ_TOL,
                "path identity failed at n={n}"
            );
        }
    }

    #[test]
    fn abc_rejects_isolated_vertices() {
        let single = Tree::new(1, vec![]).unwrap();
        assert!(abc_index(&single).is_err());
        let g = SimpleGraph::new(3, vec![(0, 1)]).unwrap();
        assert!(abc_index(&g).is_err());
    }

    #[test]
    fn abc_is_independent_of_input_edge_order() {
        let a = Tree::new(6, vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let b = Tree::new(6, vec![(3, 5), (3, 4), (1, 3), (1, 2), (0, 1)]).unwrap();
        // Construction sorts, so the summation order and hence the bits agree.
        assert_eq!(abc_index(&a).unwrap().value.to_bits(), abc_index(&b).unwrap().value.to_bits());
    }

    #[test]
    fn chord_on_p4_adds_exactly_one_sqrt_half() {
        // P4 has ABC 3/sqrt(2); closing it into C4 gives 4 edges between
        // degree-2 vertices, ABC 4/sqrt(2).
        let p4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let delta = edge_addition_delta(&p4, 0, 3).unwrap();
        assert!((delta - sqrt_half()).abs() < 1e-12);
    }

    #[test]
    fn edge_addition_rejects_existing_edge_and_k2() {
        let p4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(edge_addition_delta(&p4, 1, 2).is_err());
        // K2 has no non-adjacent pair at all.
        let k2 = SimpleGraph::new(2, vec![(0, 1)]).unwrap();
        assert!(edge_addition_delta(&k2, 0, 1).is_err());
    }
}
