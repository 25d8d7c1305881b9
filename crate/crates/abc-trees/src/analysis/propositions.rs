//! Grid verification of the five helper-function propositions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::abc::weight_unchecked;

#[inline]
fn f(x: f64, y: f64) -> f64 {
    weight_unchecked(x, y)
}

/// `-f(x,y) + f(x+1,y)`: how an edge weight reacts when one endpoint degree
/// grows by one. Non-positive for `y >= 2`, zero exactly at `y = 2`,
/// increasing in `x`, decreasing in `y`.
fn a020(x: f64, y: f64) -> f64 {
    -f(x, y) + f(x + 1.0, y)
}

/// `-f(x,y) + f(x,y-1)`: the gain when the far endpoint degree drops by
/// one. Non-negative and increasing in `x`.
fn a030(x: f64, y: f64) -> f64 {
    -f(x, y) + f(x, y - 1.0)
}

/// `-f(x,y) + f(x+dx, y-dy)`: the combined move, which telescopes into
/// [`a020`] and [`a030`] steps. Increasing in `x`, decreasing in `y`.
fn a010(x: f64, y: f64, dx: usize, dy: usize) -> f64 {
    -f(x, y) + f(x + dx as f64, y - dy as f64)
}

/// `-f(x,y) + f(x-1,y)`: mirror of [`a030`] under argument symmetry.
/// Non-negative, increasing in `y`, decreasing in `x`.
fn a040(x: f64, y: f64) -> f64 {
    -f(x, y) + f(x - 1.0, y)
}

/// `k(-f(x,6) + f(x+1,5)) + f(x+1,3)`: the star-assembly profile for `k`
/// donor edges. Increasing in `x` for every `k >= 2`.
fn a050(x: f64, k: usize) -> f64 {
    k as f64 * (-f(x, 6.0) + f(x + 1.0, 5.0)) + f(x + 1.0, 3.0)
}

/// The five helper functions with grid-checkable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PropFunction {
    A010,
    A020,
    A030,
    A040,
    A050,
}

impl PropFunction {
    pub const ALL: [PropFunction; 5] = [
        PropFunction::A010,
        PropFunction::A020,
        PropFunction::A030,
        PropFunction::A040,
        PropFunction::A050,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PropFunction::A010 => "A010",
            PropFunction::A020 => "A020",
            PropFunction::A030 => "A030",
            PropFunction::A040 => "A040",
            PropFunction::A050 => "A050",
        }
    }
}

impl fmt::Display for PropFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Evaluation grid for [`monotonicity_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub step: f64,
    /// Offset values tried for both `dx` and `dy` of the combined move.
    pub deltas: Vec<usize>,
    /// Donor-edge counts tried for the star-assembly profile.
    pub ks: Vec<usize>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            x_min: 2.0,
            x_max: 50.0,
            y_min: 2.0,
            y_max: 50.0,
            step: 0.5,
            deltas: vec![0, 1, 2, 3],
            ks: (2..=10).collect(),
        }
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "x in [{}, {}], y in [{}, {}], step {}; deltas {:?}; k {:?}",
            self.x_min, self.x_max, self.y_min, self.y_max, self.step, self.deltas, self.ks
        )
    }
}

/// Result of one grid scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub id: String,
    pub grid: String,
    pub examined: usize,
    pub violations: Vec<String>,
}

impl ScanReport {
    pub fn all_ok(&self) -> bool {
        self.examined > 0 && self.violations.is_empty()
    }
}

/// Monotonicity margin: finite differences may sit on a plateau, so the
/// claims are checked non-strictly at machine scale.
const MARGIN: f64 = 1e-12;

fn grid_points(min: f64, max: f64, step: f64) -> Vec<f64> {
    let count = ((max - min) / step).round() as usize;
    (0..=count).map(|i| min + i as f64 * step).collect()
}

/// Keeps violation lists bounded; a broken claim fails on thousands of
/// points and the first hundred tell the story.
fn push_violation(violations: &mut Vec<String>, msg: String) {
    if violations.len() < 100 {
        violations.push(msg);
    }
}

/// Checks `id`'s sign and monotonicity claims at every grid point,
/// comparing adjacent grid values as finite differences.
pub fn monotonicity_scan(id: PropFunction, grid: &GridSpec) -> Result<ScanReport> {
    if grid.step <= 0.0 {
        return Err(Error::Domain("grid step must be positive".into()));
    }
    if grid.x_min < 2.0 || grid.y_min < 2.0 {
        return Err(Error::Domain(format!(
            "{id} needs x and y at least 2; grid starts at ({}, {})",
            grid.x_min, grid.y_min
        )));
    }
    if id == PropFunction::A050 && grid.ks.iter().any(|&k| k < 2) {
        return Err(Error::Domain("the star profile needs k >= 2".into()));
    }

    let xs = grid_points(grid.x_min, grid.x_max, grid.step);
    let ys = grid_points(grid.y_min, grid.y_max, grid.step);
    let mut examined = 0usize;
    let mut violations: Vec<String> = Vec::new();

    match id {
        PropFunction::A020 => {
            for (i, &x) in xs.iter().enumerate() {
                for (j, &y) in ys.iter().enumerate() {
                    examined += 1;
                    let g = a020(x, y);
                    if y == 2.0 && g != 0.0 {
                        push_violation(
                            &mut violations,
                            format!("x={x}: boundary value {g:e} is not exactly zero"),
                        );
                    }
                    if g > MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: sign {g:e} is positive"));
                    }
                    if i + 1 < xs.len() && a020(xs[i + 1], y) < g - MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: not increasing in x"));
                    }
                    if j + 1 < ys.len() && a020(x, ys[j + 1]) > g + MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: not decreasing in y"));
                    }
                }
            }
        }
        PropFunction::A030 => {
            for (i, &x) in xs.iter().enumerate() {
                for &y in &ys {
                    examined += 1;
                    let g = a030(x, y);
                    if g < -MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: sign {g:e} is negative"));
                    }
                    if i + 1 < xs.len() && a030(xs[i + 1], y) < g - MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: not increasing in x"));
                    }
                }
            }
        }
        PropFunction::A010 => {
            for (i, &x) in xs.iter().enumerate() {
                for (j, &y) in ys.iter().enumerate() {
                    for &dx in &grid.deltas {
                        for &dy in &grid.deltas {
                            // The shrunk endpoint must stay a valid degree.
                            if (dy as f64) > y - 1.0 {
                                continue;
                            }
                            examined += 1;
                            let g = a010(x, y, dx, dy);
                            if i + 1 < xs.len() && a010(xs[i + 1], y, dx, dy) < g - MARGIN {
                                push_violation(
                                    &mut violations,
                                    format!("x={x} y={y} dx={dx} dy={dy}: not increasing in x"),
                                );
                            }
                            if j + 1 < ys.len() && a010(x, ys[j + 1], dx, dy) > g + MARGIN {
                                push_violation(
                                    &mut violations,
                                    format!("x={x} y={y} dx={dx} dy={dy}: not decreasing in y"),
                                );
                            }
                            // The combined move telescopes into single-step
                            // moves: dx grow-steps, then dy shrink-steps.
                            let mut sum = 0.0;
                            for step in 0..dx {
                                sum += a020(x + step as f64, y);
                            }
                            for step in 0..dy {
                                sum += a030(x + dx as f64, y - step as f64);
                            }
                            if (g - sum).abs() > 1e-12 {
                                push_violation(
                                    &mut violations,
                                    format!(
                                        "x={x} y={y} dx={dx} dy={dy}: decomposition off by {:e}",
                                        g - sum
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
        PropFunction::A040 => {
            for (i, &x) in xs.iter().enumerate() {
                for (j, &y) in ys.iter().enumerate() {
                    examined += 1;
                    let g = a040(x, y);
                    if g < -MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: sign {g:e} is negative"));
                    }
                    if i + 1 < xs.len() && a040(xs[i + 1], y) > g + MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: not decreasing in x"));
                    }
                    if j + 1 < ys.len() && a040(x, ys[j + 1]) < g - MARGIN {
                        push_violation(&mut violations, format!("x={x} y={y}: not increasing in y"));
                    }
                }
            }
        }
        PropFunction::A050 => {
            for (i, &x) in xs.iter().enumerate() {
                for &k in &grid.ks {
                    examined += 1;
                    let g = a050(x, k);
                    if i + 1 < xs.len() && a050(xs[i + 1], k) < g - MARGIN {
                        push_violation(&mut violations, format!("x={x} k={k}: not increasing in x"));
                    }
                }
            }
        }
    }
    Ok(ScanReport {
        id: id.id().to_string(),
        grid: grid.to_string(),
        examined,
        violations,
    })
}
