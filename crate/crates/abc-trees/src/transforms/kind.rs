//! Transformation identifiers and their closed-form index changes.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::abc::weight_unchecked;

/// Shorthand for the edge-weight function over real degrees.
#[inline]
fn f(x: f64, y: f64) -> f64 {
    weight_unchecked(x, y)
}

/// Limit of `-f(x, 6) + f(x, 5)` for growing `x`: the supremum of the change
/// a donor edge contributes when the branch on its far end shrinks from five
/// chains to four and the near hub keeps its degree.
pub(crate) fn sup_drop_6_to_5() -> f64 {
    0.2f64.sqrt() - (1.0 / 6.0f64).sqrt()
}

/// The catalogue of index-decreasing rewrites. Each kind requires a specific
/// branch configuration (see [`find_configuration`](super::find_configuration))
/// and carries a closed-form delta (see [`delta_closed_form`]).
///
/// Naming: `Pro05`, `Ta1`, `Ta2`, and `Tb` act on one hub with two branch
/// children; `T11`–`T13` consolidate the last three big branches; `T211`–`T222`
/// handle exactly two big branches; `T31`/`T32` a single one; `T1Thm4` and
/// `T2Thm4` consolidate the last five 4-chain branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    /// Hub with a B_1 and a B_{k>=5} child: rebuild the B_1 into pendant
    /// chains of lengths 2 and 3 using two paths cut from the big branch.
    Pro05,
    /// Three B_{>=5} roots, solo parent at least as large as the pair parent:
    /// cut one path from each root, star the cuts on the pair parent.
    T11,
    /// Three B_{>=5} roots, pair parent strictly larger: same surgery.
    T12,
    /// Three B_{>=5} roots under one parent: same surgery on that parent.
    T13,
    /// Two B_{>=5} roots under different parents; the smaller parent has a
    /// B_2/B_3 child: move one path from its big branch onto that child.
    T211,
    /// Two B_{>=5} roots under different parents; the smaller parent's other
    /// children are all B_4 roots: four cuts form a 3-chain star on it.
    T212,
    /// Two B_{>=5} roots under one parent with a B_2/B_3 child: move one
    /// path from the larger root onto that child.
    T221,
    /// Two B_{>=5} roots under one parent whose other children are all B_4
    /// roots: four cuts form a 3-chain star on the parent.
    T222,
    /// One B_{>=5} root whose parent has a B_2/B_3 child: move one path.
    T31,
    /// One B_{>=5} root whose parent's other children are all B_4 roots:
    /// four cuts form a 3-chain star on the parent.
    T32,
    /// Hub of degree <= 241 with a B_1 and a B_4 child: rebuild the B_1 into
    /// chains of lengths 2 and 3 using two paths cut from the B_4.
    Ta1,
    /// Hub of degree >= 242 with a B_1 and a B_4 child: hand the whole B_1
    /// over to the B_4 root, growing it into a B_5.
    Ta2,
    /// Hub with a B_2 and a B_4 child: move one path from the B_4 to the B_2.
    Tb,
    /// More than four B_4 branches, last five under two parents: five cuts
    /// form a double star on the smaller parent.
    T1Thm4,
    /// More than four B_4 branches, last five under one parent: five cuts
    /// form a double star on that parent.
    T2Thm4,
}

/// Whether a closed form reproduces the exact delta or only bounds it above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Exact,
    UpperBound,
}

impl TransformKind {
    pub const ALL: [TransformKind; 15] = [
        TransformKind::Pro05,
        TransformKind::T11,
        TransformKind::T12,
        TransformKind::T13,
        TransformKind::T211,
        TransformKind::T212,
        TransformKind::T221,
        TransformKind::T222,
        TransformKind::T31,
        TransformKind::T32,
        TransformKind::Ta1,
        TransformKind::Ta2,
        TransformKind::Tb,
        TransformKind::T1Thm4,
        TransformKind::T2Thm4,
    ];

    /// Exact kinds change the weights of a fixed, fully-parameterized edge
    /// set; upper-bound kinds come from forms maximized over free degrees.
    pub fn bound_kind(self) -> BoundKind {
        match self {
            TransformKind::Pro05
            | TransformKind::Ta1
            | TransformKind::Tb
            | TransformKind::T211
            | TransformKind::T221
            | TransformKind::T31 => BoundKind::Exact,
            _ => BoundKind::UpperBound,
        }
    }

    /// Parameter names (alphabetical) expected by [`delta_closed_form`]:
    /// `du` is the governing hub degree before the rewrite, `dv` a donor
    /// branch-root degree, `dw` a recipient branch-root degree, and `dx` the
    /// hub's parent degree.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            TransformKind::Pro05 => &["du", "dv"],
            TransformKind::T211 | TransformKind::T221 | TransformKind::T31 => {
                &["du", "dv", "dw"]
            }
            TransformKind::Ta2 => &["du", "dx"],
            TransformKind::T1Thm4 => &[],
            _ => &["du"],
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TransformKind::Pro05 => "pro05",
            TransformKind::T11 => "t11",
            TransformKind::T12 => "t12",
            TransformKind::T13 => "t13",
            TransformKind::T211 => "t211",
            TransformKind::T212 => "t212",
            TransformKind::T221 => "t221",
            TransformKind::T222 => "t222",
            TransformKind::T31 => "t31",
            TransformKind::T32 => "t32",
            TransformKind::Ta1 => "ta1",
            TransformKind::Ta2 => "ta2",
            TransformKind::Tb => "tb",
            TransformKind::T1Thm4 => "t1_thm4",
            TransformKind::T2Thm4 => "t2_thm4",
        };
        f.write_str(name)
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .to_ascii_lowercase()
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect();
        let kind = match key.as_str() {
            "pro05" | "tpro05" => TransformKind::Pro05,
            "t11" => TransformKind::T11,
            "t12" => TransformKind::T12,
            "t13" => TransformKind::T13,
            "t211" => TransformKind::T211,
            "t212" => TransformKind::T212,
            "t221" => TransformKind::T221,
            "t222" => TransformKind::T222,
            "t31" => TransformKind::T31,
            "t32" => TransformKind::T32,
            "ta1" => TransformKind::Ta1,
            "ta2" => TransformKind::Ta2,
            "tb" => TransformKind::Tb,
            "t1thm4" => TransformKind::T1Thm4,
            "t2thm4" => TransformKind::T2Thm4,
            _ => {
                return Err(Error::Domain(format!(
                    "unknown transformation kind {s:?}; expected one of {}",
                    TransformKind::ALL.map(|k| k.to_string()).join(", ")
                )))
            }
        };
        Ok(kind)
    }
}

/// Pull the expected parameters out of `params`, rejecting missing or
/// unexpected names so typos surface as errors rather than silent defaults.
fn expect_params(kind: TransformKind, params: &BTreeMap<String, f64>) -> Result<Vec<f64>> {
    let expected = kind.param_names();
    let have: Vec<&str> = params.keys().map(String::as_str).collect();
    if have != expected {
        return Err(Error::Domain(format!(
            "{kind} takes parameters [{}], got [{}]",
            expected.join(", "),
            have.join(", ")
        )));
    }
    Ok(expected.iter().map(|k| params[*k]).collect())
}

fn check_domain(kind: TransformKind, name: &str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_nan() || value < min || value > max {
        return Err(Error::Domain(format!(
            "{kind}: parameter {name}={value} outside [{min}, {max}]"
        )));
    }
    Ok(())
}

/// Closed-form index change of `kind` at the given degrees.
///
/// For [`BoundKind::Exact`] kinds the value equals the recomputed delta of
/// any instance with those degrees; for [`BoundKind::UpperBound`] kinds it is
/// an upper bound on it (the underlying form was maximized over the degrees
/// it does not mention). Parameters follow [`TransformKind::param_names`];
/// real values are accepted because the monotonicity analysis evaluates the
/// forms between integers.
pub fn delta_closed_form(
    kind: TransformKind,
    params: &BTreeMap<String, f64>,
) -> Result<(f64, BoundKind)> {
    let p = expect_params(kind, params)?;
    let value = match kind {
        TransformKind::Pro05 => {
            let (du, dv) = (p[0], p[1]);
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            check_domain(kind, "dv", dv, 6.0, f64::INFINITY)?;
            -f(du, dv) + f(du, dv - 2.0) - f(du, 2.0) + f(du, 3.0)
        }
        TransformKind::T11 | TransformKind::T12 => {
            // Receiving (pair) parent of degree du; the solo parent's edge is
            // bounded by its supremum.
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            sup_drop_6_to_5() + 2.0 * (-f(du, 6.0) + f(du + 1.0, 5.0)) - FRAC_1_SQRT_2
                + f(du + 1.0, 3.0)
        }
        TransformKind::T13 => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            3.0 * (-f(du, 6.0) + f(du + 1.0, 5.0)) - FRAC_1_SQRT_2 + f(du + 1.0, 3.0)
        }
        TransformKind::T211 | TransformKind::T221 | TransformKind::T31 => {
            // One path moves from the degree-dv donor to the degree-dw
            // recipient, both children of the degree-du hub.
            let (du, dv, dw) = (p[0], p[1], p[2]);
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            check_domain(kind, "dv", dv, 6.0, f64::INFINITY)?;
            check_domain(kind, "dw", dw, 3.0, 4.0)?;
            -f(du, dv) + f(du, dv - 1.0) - f(du, dw) + f(du, dw + 1.0)
        }
        TransformKind::T212 => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            // The far parent's donor edge contributes at most the supremum;
            // the attachment edge lands on the incremented hub.
            sup_drop_6_to_5() - f(du, 6.0) + f(du, 5.0) + 2.0 * (-f(du, 5.0) + f(du, 4.0))
                - FRAC_1_SQRT_2
                + f(du + 1.0, 4.0)
        }
        TransformKind::T222 => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            2.0 * (-f(du, 6.0) + f(du, 5.0)) + 2.0 * (-f(du, 5.0) + f(du, 4.0)) - FRAC_1_SQRT_2
                + f(du + 1.0, 4.0)
        }
        TransformKind::T32 => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            -f(du, 6.0) + f(du, 5.0) + 3.0 * (-f(du, 5.0) + f(du, 4.0)) - FRAC_1_SQRT_2
                + f(du + 1.0, 4.0)
        }
        TransformKind::Ta1 => {
            // Increasing in du with an exact zero at du = 242 (there
            // f(du,5), f(du,3), f(du,2) are 7, 9, 11 over sqrt(242)).
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            -f(du, 5.0) + 2.0 * f(du, 3.0) - f(du, 2.0)
        }
        TransformKind::Ta2 => {
            let (du, dx) = (p[0], p[1]);
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            check_domain(kind, "dx", dx, 1.0, f64::INFINITY)?;
            // The du - 2 surviving non-branch edges are each bounded by the
            // parent edge's change (the largest, since dx dominates).
            -f(du, 5.0) + f(du - 1.0, 6.0) + (du - 2.0) * (-f(du, dx) + f(du - 1.0, dx))
        }
        TransformKind::Tb => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            -f(du, 5.0) + 2.0 * f(du, 4.0) - f(du, 3.0)
        }
        TransformKind::T1Thm4 => {
            // Limit of the five-cut consolidation as both parent degrees
            // grow; independent of how the five split between them.
            3.0 - 5f64.sqrt() - 2f64.sqrt() + (5.0 / 12.0f64).sqrt()
        }
        TransformKind::T2Thm4 => {
            let du = p[0];
            check_domain(kind, "du", du, 2.0, f64::INFINITY)?;
            -5.0 * f(du, 5.0) + 6.0 * f(du + 1.0, 4.0) - 2.0 * f(2.0, 1.0) + f(4.0, 3.0)
        }
    };
    Ok((value, kind.bound_kind()))
}
