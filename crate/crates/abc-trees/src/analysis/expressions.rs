//! Closed-form expressions behind the transformation bounds, with a root
//! scanner and a limit evaluator for pinning their numeric landmarks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::abc::weight_unchecked;
use crate::transforms::sup_drop_6_to_5;

const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Values this close to zero count as exact zeros: the expressions combine
/// a handful of square roots, so genuine zeros land within a few ulps.
const ZERO_BAND: f64 = 1e-12;

/// Bisection stops once the enclosing interval is this narrow.
const BISECT_WIDTH: f64 = 1e-4;

/// Successive ladder rungs closer than this mean the limit has converged
/// without extrapolation.
const CONVERGED: f64 = 1e-9;

#[inline]
fn f(x: f64, y: f64) -> f64 {
    weight_unchecked(x, y)
}

/// One-dimensional profiles of the transformation deltas, parameterized by
/// the hub degree `x`.
///
/// The `*Slope` variants differentiate their profile numerically; their
/// roots locate the profile's interior extremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expression {
    /// `f(x,5) - f(x,6)`: what one donor edge gains when a six-ending
    /// becomes a five-ending. Its limit bounds every donor term.
    DropSixToFive,
    /// Exact delta of growing a one-pair branch into a two-path chain
    /// next to a full branch: `-f(x,6) + f(x,4) - f(x,2) + f(x,3)`.
    Pro05Profile,
    /// Numeric derivative of [`Expression::Pro05Profile`].
    Pro05Slope,
    /// Bound for merging three branch roots into a two-path star.
    TripleBound,
    /// Bound profile for the four-root merge with the source under its
    /// own parent.
    QuadSplit,
    /// Bound profile for the four-root merge under a shared parent.
    QuadCommon,
    /// Numeric derivative of [`Expression::QuadCommon`].
    QuadCommonSlope,
    /// Bound profile for the single-donor four-root merge.
    QuadSingle,
    /// Numeric derivative of [`Expression::QuadSingle`].
    QuadSingleSlope,
    /// Exact delta of the pair-chain rewrite on a full-branch hub:
    /// `-f(x,5) + 2f(x,3) - f(x,2)`. Crosses zero at an integer degree.
    PairChainZero,
    /// Tail of the branch-handoff bound with the far degree sent to
    /// infinity; its sign flip marks where the handoff stops paying.
    HandoffTail,
    /// Bound for merging five full branches into a double star.
    DoubleStarBound,
    /// Constant composite: losing a path end while a six-ending improves,
    /// `-1/sqrt(2) + (1/sqrt(5) - 1/sqrt(6))`.
    EndDropComposite,
}

impl Expression {
    pub const ALL: [Expression; 13] = [
        Expression::DropSixToFive,
        Expression::Pro05Profile,
        Expression::Pro05Slope,
        Expression::TripleBound,
        Expression::QuadSplit,
        Expression::QuadCommon,
        Expression::QuadCommonSlope,
        Expression::QuadSingle,
        Expression::QuadSingleSlope,
        Expression::PairChainZero,
        Expression::HandoffTail,
        Expression::DoubleStarBound,
        Expression::EndDropComposite,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Expression::DropSixToFive => "drop_6_to_5",
            Expression::Pro05Profile => "pro05_profile",
            Expression::Pro05Slope => "pro05_slope",
            Expression::TripleBound => "t11_bound",
            Expression::QuadSplit => "t212_profile",
            Expression::QuadCommon => "t222_profile",
            Expression::QuadCommonSlope => "t222_slope",
            Expression::QuadSingle => "t32_profile",
            Expression::QuadSingleSlope => "t32_slope",
            Expression::PairChainZero => "ta1_profile",
            Expression::HandoffTail => "ta2_tail",
            Expression::DoubleStarBound => "t2_thm4_bound",
            Expression::EndDropComposite => "path_end_drop",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Expression::DropSixToFive => f(x, 5.0) - f(x, 6.0),
            Expression::Pro05Profile => -f(x, 6.0) + f(x, 4.0) - f(x, 2.0) + f(x, 3.0),
            Expression::Pro05Slope => central_diff(Expression::Pro05Profile, x),
            Expression::TripleBound => {
                sup_drop_6_to_5() + 2.0 * (-f(x, 6.0) + f(x + 1.0, 5.0)) - INV_SQRT2
                    + f(x + 1.0, 3.0)
            }
            Expression::QuadSplit => {
                sup_drop_6_to_5() + (-f(x, 6.0) + f(x, 5.0)) + 2.0 * (-f(x, 5.0) + f(x, 4.0))
                    - INV_SQRT2
                    + f(x, 4.0)
            }
            Expression::QuadCommon => {
                2.0 * (-f(x, 6.0) + f(x, 5.0)) + 2.0 * (-f(x, 5.0) + f(x, 4.0)) - INV_SQRT2
                    + f(x, 4.0)
            }
            Expression::QuadCommonSlope => central_diff(Expression::QuadCommon, x),
            Expression::QuadSingle => {
                (-f(x, 6.0) + f(x, 5.0)) + 3.0 * (-f(x, 5.0) + f(x, 4.0)) - INV_SQRT2 + f(x, 4.0)
            }
            Expression::QuadSingleSlope => central_diff(Expression::QuadSingle, x),
            Expression::PairChainZero => -f(x, 5.0) + 2.0 * f(x, 3.0) - f(x, 2.0),
            Expression::HandoffTail => {
                -f(x, 5.0)
                    + f(x - 1.0, 6.0)
                    + (x - 2.0) * (1.0 / (x - 1.0).sqrt() - 1.0 / x.sqrt())
            }
            Expression::DoubleStarBound => {
                -5.0 * f(x, 5.0) + 6.0 * f(x + 1.0, 4.0) - 2.0 * f(2.0, 1.0) + f(4.0, 3.0)
            }
            Expression::EndDropComposite => {
                -INV_SQRT2 + (0.2f64.sqrt() - (1.0f64 / 6.0).sqrt())
            }
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.id())
    }
}

fn central_diff(expr: Expression, x: f64) -> f64 {
    let h = 1e-5;
    (expr.eval(x + h) - expr.eval(x - h)) / (2.0 * h)
}

/// A sign change found by [`sign_change_scan`]: the coarse grid cell that
/// brackets it and the refined root inside.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SignChange {
    pub bracket: (f64, f64),
    pub root: f64,
}

/// Walks `interval` in `step` increments looking for the first sign
/// change of `expr`, then bisects it down to a root. A grid point whose
/// value sits inside the zero band is itself reported as the root, so
/// exact integer zeros come back exact. `None` means the sign never
/// changed.
pub fn sign_change_scan(
    expr: Expression,
    interval: (f64, f64),
    step: f64,
) -> Result<Option<SignChange>> {
    let (lo, hi) = interval;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!(
            "scan interval [{lo}, {hi}] must be finite with lo < hi"
        )));
    }
    if step <= 0.0 {
        return Err(Error::Domain("scan step must be positive".into()));
    }
    let count = ((hi - lo) / step).ceil() as usize;
    let mut prev_x = lo;
    let mut prev_v = checked_eval(expr, lo)?;
    if prev_v.abs() <= ZERO_BAND {
        return Ok(Some(SignChange {
            bracket: (lo, lo),
            root: lo,
        }));
    }
    for i in 1..=count {
        let x = (lo + i as f64 * step).min(hi);
        let v = checked_eval(expr, x)?;
        if v.abs() <= ZERO_BAND {
            return Ok(Some(SignChange {
                bracket: (prev_x, x),
                root: x,
            }));
        }
        if prev_v.signum() != v.signum() {
            return Ok(Some(bisect(expr, prev_x, prev_v, x)));
        }
        prev_x = x;
        prev_v = v;
    }
    Ok(None)
}

fn checked_eval(expr: Expression, x: f64) -> Result<f64> {
    let v = expr.eval(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{expr} is not finite at x = {x}")))
    }
}

fn bisect(expr: Expression, mut lo: f64, v_lo: f64, mut hi: f64) -> SignChange {
    let bracket = (lo, hi);
    let lo_sign = v_lo.signum();
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let v = expr.eval(mid);
        if v.abs() <= ZERO_BAND {
            return SignChange { bracket, root: mid };
        }
        if v.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    SignChange {
        bracket,
        root: 0.5 * (lo + hi),
    }
}

/// Evaluation ladder behind a [`limit_eval`] verdict.
#[derive(Debug, Clone, Serialize)]
pub struct LimitTrace {
    pub id: String,
    /// `(x, value)` pairs at x = 1e3, 1e4, ... until convergence.
    pub ladder: Vec<(f64, f64)>,
    pub value: f64,
    /// True when the tail still moved at the top rung and the limit was
    /// extrapolated from the last two values.
    pub extrapolated: bool,
}

/// Estimates `expr`'s limit as x grows without bound by climbing powers
/// of ten up to 1e9. Most of these expressions approach their limit like
/// `a/x`, which at 1e9 still moves by a few parts in 1e-9 per rung; the
/// final step is then Richardson-extrapolated (the `1/x` tail shrinks
/// tenfold per rung, so the remaining gap is the last step over nine).
pub fn limit_eval(expr: Expression) -> Result<LimitTrace> {
    let mut ladder = Vec::new();
    let mut prev: Option<f64> = None;
    for k in 3..=9 {
        let x = 10f64.powi(k);
        let v = checked_eval(expr, x)?;
        ladder.push((x, v));
        if let Some(p) = prev {
            if (v - p).abs() < CONVERGED {
                return Ok(LimitTrace {
                    id: expr.id().to_string(),
                    ladder,
                    value: v,
                    extrapolated: false,
                });
            }
        }
        prev = Some(v);
    }
    let (_, v8) = ladder[ladder.len() - 2];
    let (_, v9) = ladder[ladder.len() - 1];
    if (v9 - v8).abs() > 1e-3 {
        return Err(Error::Domain(format!(
            "{expr} still moves by {:e} at x = 1e9; no limit",
            (v9 - v8).abs()
        )));
    }
    Ok(LimitTrace {
        id: expr.id().to_string(),
        ladder,
        value: v9 + (v9 - v8) / 9.0,
        extrapolated: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_values_at_the_smallest_hub_degree() {
        assert!((Expression::Pro05Profile.eval(6.0) - (-0.0331932)).abs() < 1e-6);
        assert!((Expression::QuadSplit.eval(6.0) - (-0.0108595)).abs() < 1e-6);
        assert!((Expression::QuadCommon.eval(6.0) - (-0.0291485)).abs() < 1e-6);
        assert!((Expression::QuadSingle.eval(6.0) - (-0.0201971)).abs() < 1e-6);
    }

    #[test]
    fn limits_match_their_closed_forms() {
        let cases = [
            (Expression::DropSixToFive, 0.2f64.sqrt() - (1.0f64 / 6.0).sqrt()),
            (
                Expression::Pro05Profile,
                -(1.0f64 / 6.0).sqrt() + 0.5 - INV_SQRT2 + (1.0f64 / 3.0).sqrt(),
            ),
            (Expression::TripleBound, -0.0128606),
            (Expression::QuadCommon, -0.0236034),
            (Expression::QuadSingle, -0.00978226),
            (Expression::DoubleStarBound, 3.0 - 5.0f64.sqrt() - 2.0f64.sqrt() + (5.0f64 / 12.0).sqrt()),
        ];
        for (expr, expected) in cases {
            let trace = limit_eval(expr).unwrap();
            assert!(
                (trace.value - expected).abs() < 1e-5,
                "{expr}: {} vs {expected}",
                trace.value
            );
        }
    }

    #[test]
    fn constants_converge_without_extrapolation() {
        let trace = limit_eval(Expression::EndDropComposite).unwrap();
        assert!(!trace.extrapolated);
        assert!((trace.value - (-0.6681415)).abs() < 1e-6);
        assert!(trace.ladder.len() < 7);
    }

    #[test]
    fn slow_tails_get_extrapolated() {
        let trace = limit_eval(Expression::DropSixToFive).unwrap();
        assert!(trace.extrapolated);
        assert_eq!(trace.ladder.len(), 7);
    }

    #[test]
    fn slope_roots_locate_the_profile_extrema() {
        let s = sign_change_scan(Expression::Pro05Slope, (6.0, 100.0), 1.0)
            .unwrap()
            .expect("slope changes sign");
        assert!((s.root - 31.3997).abs() < 1e-3, "root {}", s.root);

        let s = sign_change_scan(Expression::QuadCommonSlope, (6.0, 20.0), 0.5)
            .unwrap()
            .expect("slope changes sign");
        assert!((s.root - 8.8).abs() < 0.05, "root {}", s.root);

        let s = sign_change_scan(Expression::QuadSingleSlope, (6.0, 20.0), 0.5)
            .unwrap()
            .expect("slope changes sign");
        assert!((s.root - 6.27567).abs() < 1e-3, "root {}", s.root);
    }

    #[test]
    fn pair_chain_zero_is_exact_at_an_integer_degree() {
        // At degree 242 all three weights are rational multiples of the
        // same square root, so the profile cancels to zero on the grid
        // point itself.
        let s = sign_change_scan(Expression::PairChainZero, (6.0, 400.0), 1.0)
            .unwrap()
            .expect("profile crosses zero");
        assert_eq!(s.bracket, (241.0, 242.0));
        assert_eq!(s.root, 242.0);
        assert!(Expression::PairChainZero.eval(242.0).abs() <= ZERO_BAND);
    }

    #[test]
    fn handoff_tail_flips_sign_between_169_and_170() {
        let s = sign_change_scan(Expression::HandoffTail, (6.0, 400.0), 1.0)
            .unwrap()
            .expect("tail flips sign");
        assert_eq!(s.bracket, (169.0, 170.0));
        assert!(Expression::HandoffTail.eval(6.0) > 0.0);
        assert!(Expression::HandoffTail.eval(400.0) < 0.0);
    }

    #[test]
    fn a_sign_that_never_changes_reports_none() {
        let s = sign_change_scan(Expression::DropSixToFive, (6.0, 50.0), 1.0).unwrap();
        assert!(s.is_none());
    }

    #[test]
    fn degenerate_scan_requests_are_rejected() {
        assert!(sign_change_scan(Expression::Pro05Profile, (10.0, 6.0), 1.0).is_err());
        assert!(sign_change_scan(Expression::Pro05Profile, (6.0, 10.0), 0.0).is_err());
    }

    #[test]
    fn the_composite_is_constant_in_x() {
        assert_eq!(
            Expression::EndDropComposite.eval(6.0),
            Expression::EndDropComposite.eval(1.0e6)
        );
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = Expression::ALL.iter().map(|e| e.id()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), Expression::ALL.len());
    }
}
