//! The table of numeric landmarks: every decimal constant and root the
//! transformation analysis relies on, recomputed from scratch and compared
//! against its expected value.

use serde::Serialize;

use crate::error::Result;

use super::expressions::{limit_eval, sign_change_scan, Expression};

/// One recomputed landmark.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantRecord {
    pub id: String,
    pub expected: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    /// How `computed` was obtained (point evaluation, limit ladder, or
    /// root scan), for the reader of a failing report.
    pub source: String,
}

impl ConstantRecord {
    pub fn pass(&self) -> bool {
        self.abs_error <= self.tolerance
    }
}

fn record(id: &str, expected: f64, computed: f64, tolerance: f64, source: String) -> ConstantRecord {
    ConstantRecord {
        id: id.to_string(),
        expected,
        computed,
        abs_error: (computed - expected).abs(),
        tolerance,
        source,
    }
}

/// Recomputes all sixteen landmarks. Point values and limits carry a
/// 1e-5 tolerance; roots carry the resolution their scan can justify. A
/// root scan that finds no sign change records a NaN, which can never
/// pass.
pub fn constant_table() -> Result<Vec<ConstantRecord>> {
    let mut rows = Vec::new();

    let value_rows = [
        ("pro05_at_6", Expression::Pro05Profile, -0.0331932),
        ("t212_at_6", Expression::QuadSplit, -0.0108595),
        ("t222_at_6", Expression::QuadCommon, -0.0291485),
        ("t32_at_6", Expression::QuadSingle, -0.0201971),
        ("path_end_drop", Expression::EndDropComposite, -0.668141),
    ];
    for (id, expr, expected) in value_rows {
        rows.push(record(
            id,
            expected,
            expr.eval(6.0),
            1e-5,
            format!("{expr} at x = 6"),
        ));
    }

    let limit_rows = [
        ("pro05_limit", Expression::Pro05Profile, -0.0380048),
        ("drop_6_to_5_limit", Expression::DropSixToFive, 0.0389653),
        ("t11_limit", Expression::TripleBound, -0.0128606),
        ("t222_limit", Expression::QuadCommon, -0.0236034),
        ("t32_limit", Expression::QuadSingle, -0.00978226),
        ("t2_thm4_limit", Expression::DoubleStarBound, -0.00478432),
    ];
    for (id, expr, expected) in limit_rows {
        rows.push(record(
            id,
            expected,
            limit_eval(expr)?.value,
            1e-5,
            format!("{expr} limit ladder"),
        ));
    }

    let root_rows = [
        ("pro05_slope_zero", Expression::Pro05Slope, 31.3997, (6.0, 100.0), 1.0, 1e-3),
        ("ta1_zero", Expression::PairChainZero, 242.0, (6.0, 400.0), 1.0, 1.0),
        ("t222_slope_zero", Expression::QuadCommonSlope, 8.8, (6.0, 20.0), 0.5, 0.05),
        ("t32_slope_zero", Expression::QuadSingleSlope, 6.27567, (6.0, 20.0), 0.5, 1e-3),
        ("ta2_tail_flip", Expression::HandoffTail, 170.0, (6.0, 400.0), 1.0, 1.0),
    ];
    for (id, expr, expected, interval, step, tol) in root_rows {
        let computed = sign_change_scan(expr, interval, step)?
            .map_or(f64::NAN, |change| change.root);
        rows.push(record(
            id,
            expected,
            computed,
            tol,
            format!("{expr} root scan over [{}, {}]", interval.0, interval.1),
        ));
    }

    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_landmark_passes() {
        let rows = constant_table().unwrap();
        assert_eq!(rows.len(), 16);
        for row in &rows {
            assert!(
                row.pass(),
                "{}: expected {}, computed {}, error {:e} > {:e} ({})",
                row.id,
                row.expected,
                row.computed,
                row.abs_error,
                row.tolerance,
                row.source
            );
        }
    }

    #[test]
    fn ids_are_unique_and_tolerances_positive() {
        let rows = constant_table().unwrap();
        let mut ids: Vec<_> = rows.iter().map(|r| r.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), rows.len());
        for row in &rows {
            assert!(row.tolerance > 0.0);
            assert!(row.expected.is_finite());
        }
    }

    #[test]
    fn a_missing_root_can_never_pass() {
        let nan = record("probe", 1.0, f64::NAN, 10.0, "test".to_string());
        assert!(!nan.pass());
    }
}
