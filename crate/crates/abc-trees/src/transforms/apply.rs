//! Performing a transformation at a located configuration.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::abc::abc_index;
use crate::graph::paths::{detect_branches, BranchProfile};
use crate::graph::tree::Tree;

use super::kind::{delta_closed_form, BoundKind, TransformKind};
use super::locate::{find_configuration, Location};

/// A transformed tree together with the exact index change and the
/// catalogue's closed-form prediction for it.
///
/// Invariants upheld by [`apply`]: `delta_exact` is the recomputed index of
/// `tree` minus the index of the input; for an [`BoundKind::Exact`] kind the
/// two deltas agree to summation noise, and for an upper-bound kind
/// `delta_exact` never exceeds `delta_closed_form` by more than that noise.
#[derive(Debug, Clone)]
pub struct TransformOutcome {
    pub tree: Tree,
    pub delta_exact: f64,
    pub delta_closed_form: f64,
    pub bound_kind: BoundKind,
}

/// The reference shapes the multi-donor kinds assemble from cut material.
///
/// Root degrees are quoted as in a host tree, where the root also has an
/// attachment edge; the standalone subtree has one less.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarBranchKind {
    /// Six vertices: a root (degree 3 attached) with pendant paths of
    /// lengths 2 and 3.
    B2Star,
    /// Eight vertices: a root (degree 4 attached) with pendant paths of
    /// lengths 2, 2 and 3.
    B3Star,
    /// Ten vertices: a root (degree 4 attached) whose degree-3 child and
    /// itself each carry two pendant paths of length 2.
    B3DoubleStar,
}

/// A standalone reference shape, rooted at vertex 0.
#[derive(Debug, Clone)]
pub struct StarBranch {
    pub kind: StarBranchKind,
    pub tree: Tree,
}

impl StarBranch {
    pub fn build(kind: StarBranchKind) -> StarBranch {
        let edges: &[(usize, usize)] = match kind {
            StarBranchKind::B2Star => &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)],
            StarBranchKind::B3Star => {
                &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7)]
            }
            StarBranchKind::B3DoubleStar => &[
                (0, 1),
                (0, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (1, 6),
                (6, 7),
                (1, 8),
                (8, 9),
            ],
        };
        let n = edges.len() + 1;
        let tree = Tree::new(n, edges.to_vec())
            .expect("reference shapes are trees")
            .with_root(0)
            .expect("vertex 0 exists");
        StarBranch { kind, tree }
    }
}

/// Applies `kind` at `loc`, which must be one of the locations
/// [`find_configuration`] reports for this tree.
///
/// Vertex ids are preserved: the surgery only moves edges, so callers can
/// track every vertex across the transformation. The stored root survives.
pub fn apply(t: &Tree, kind: TransformKind, loc: Location) -> Result<TransformOutcome> {
    if !find_configuration(t, kind).contains(&loc) {
        return Err(Error::Domain(format!(
            "{kind} does not apply at {loc:?} in this tree"
        )));
    }
    let profile = detect_branches(t);
    let surgeon = Surgeon {
        t,
        adj: t.adjacency(),
        ranks: profile.discovery_ranks(),
        profile,
    };
    let plan = surgeon.plan(kind, loc);

    let mut edges: Vec<(usize, usize)> = t.edges().to_vec();
    let normalize = |(u, v): (usize, usize)| if u < v { (u, v) } else { (v, u) };
    let removals: Vec<(usize, usize)> = plan.remove.iter().copied().map(normalize).collect();
    edges.retain(|e| !removals.contains(e));
    edges.extend(plan.add.iter().copied().map(normalize));

    let mut after = Tree::new(t.n(), edges)?;
    if let Some(root) = t.root() {
        after = after.with_root(root)?;
    }

    let before = abc_index(t)?.value;
    let recomputed = abc_index(&after)?.value;
    let (closed, bound_kind) = delta_closed_form(kind, &plan.params)?;
    Ok(TransformOutcome {
        tree: after,
        delta_exact: recomputed - before,
        delta_closed_form: closed,
        bound_kind,
    })
}

struct Plan {
    remove: Vec<(usize, usize)>,
    add: Vec<(usize, usize)>,
    params: BTreeMap<String, f64>,
}

struct Surgeon<'a> {
    t: &'a Tree,
    adj: Vec<Vec<usize>>,
    profile: BranchProfile,
    ranks: Vec<usize>,
}

impl Surgeon<'_> {
    fn children(&self, v: usize) -> Vec<usize> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| w != self.profile.parent[v])
            .collect()
    }

    /// The `count` pendant pairs of `branch_root` latest in discovery
    /// order, as (midpoint, leaf), latest first.
    fn latest_pairs(&self, branch_root: usize, count: usize) -> Vec<(usize, usize)> {
        let mut mids: Vec<usize> = self
            .children(branch_root)
            .into_iter()
            .filter(|&m| self.t.degree(m) == 2)
            .collect();
        mids.sort_by_key(|&m| std::cmp::Reverse(self.ranks[m]));
        mids.truncate(count);
        assert_eq!(mids.len(), count, "branch root too small for the cut");
        mids.into_iter()
            .map(|m| (m, self.children(m)[0]))
            .collect()
    }

    fn deg(&self, v: usize) -> f64 {
        self.t.degree(v) as f64
    }

    fn plan(&self, kind: TransformKind, loc: Location) -> Plan {
        let mut params = BTreeMap::new();
        match (kind, loc) {
            // Two pairs leave the big branch and continue the small one as a
            // single pendant path of length 4; the path's interior stays all
            // degree 2, so only the small root's degree changes.
            (
                TransformKind::Pro05 | TransformKind::Ta1,
                Location::BranchPair { hub, shrink, grow },
            ) => {
                let pairs = self.latest_pairs(shrink, 2);
                let [(ma, la), (mb, _)] = pairs[..] else {
                    unreachable!()
                };
                params.insert("du".into(), self.deg(hub));
                if kind == TransformKind::Pro05 {
                    params.insert("dv".into(), self.deg(shrink));
                }
                Plan {
                    remove: vec![(shrink, ma), (shrink, mb)],
                    add: vec![(grow, ma), (la, mb)],
                    params,
                }
            }
            // One pair moves between the two branch roots.
            (TransformKind::Tb, Location::BranchPair { hub, shrink, grow }) => {
                let (m, _) = self.latest_pairs(shrink, 1)[0];
                params.insert("du".into(), self.deg(hub));
                Plan {
                    remove: vec![(shrink, m)],
                    add: vec![(grow, m)],
                    params,
                }
            }
            // The whole small branch re-hangs under the big root. Its own
            // vertices keep degree 2 and 1, so every moved weight persists.
            (TransformKind::Ta2, Location::BranchHandoff { hub, moved, target }) => {
                params.insert("du".into(), self.deg(hub));
                // The closed form charges the hub's surviving edges at its
                // heaviest surviving neighbor, which keeps it a true bound
                // whatever surrounds the hub.
                let dx = self.adj[hub]
                    .iter()
                    .copied()
                    .filter(|&w| w != moved && w != target)
                    .map(|w| self.t.degree(w))
                    .max()
                    .expect("gated hub degree leaves surviving neighbors");
                params.insert("dx".into(), dx as f64);
                Plan {
                    remove: vec![(hub, moved)],
                    add: vec![(target, moved)],
                    params,
                }
            }
            (
                TransformKind::T11 | TransformKind::T12,
                Location::TripleSplit {
                    solo_root,
                    pair_parent,
                    pair_roots,
                    ..
                },
            ) => {
                let (source, others) = if kind == TransformKind::T11 {
                    (solo_root, pair_roots)
                } else {
                    (pair_roots[0], [solo_root, pair_roots[1]])
                };
                params.insert("du".into(), self.deg(pair_parent));
                self.assemble_star(pair_parent, source, &others, params)
            }
            (TransformKind::T13, Location::TripleCommon { parent, roots }) => {
                params.insert("du".into(), self.deg(parent));
                self.assemble_star(parent, roots[0], &roots[1..], params)
            }
            // One pair moves from the big branch to the recipient branch.
            (
                TransformKind::T211 | TransformKind::T221 | TransformKind::T31,
                Location::DonorRecipient {
                    hub,
                    donor,
                    recipient,
                },
            ) => {
                let (m, _) = self.latest_pairs(donor, 1)[0];
                params.insert("du".into(), self.deg(hub));
                params.insert("dv".into(), self.deg(donor));
                params.insert("dw".into(), self.deg(recipient));
                Plan {
                    remove: vec![(donor, m)],
                    add: vec![(recipient, m)],
                    params,
                }
            }
            (
                TransformKind::T212 | TransformKind::T222 | TransformKind::T32,
                Location::StarFour { hub, donors },
            ) => {
                params.insert("du".into(), self.deg(hub));
                self.assemble_star(hub, donors[0], &donors[1..], params)
            }
            (
                TransformKind::T1Thm4 | TransformKind::T2Thm4,
                Location::FiveSplit { hub, donors },
            ) => {
                if kind == TransformKind::T2Thm4 {
                    params.insert("du".into(), self.deg(hub));
                }
                self.assemble_double_star(hub, donors, params)
            }
            _ => unreachable!("location shape was validated against the kind"),
        }
    }

    /// One pair per donor becomes a star under `hub`: the source pair's
    /// midpoint turns into the star root, its leaf caps a length-3 path fed
    /// by the last other pair, and the remaining pairs stay length-2 paths.
    fn assemble_star(
        &self,
        hub: usize,
        source: usize,
        others: &[usize],
        params: BTreeMap<String, f64>,
    ) -> Plan {
        let (root_mid, root_leaf) = self.latest_pairs(source, 1)[0];
        let mut remove = vec![(source, root_mid), (root_mid, root_leaf)];
        let mut add = vec![(hub, root_mid)];
        for (i, &donor) in others.iter().enumerate() {
            let (m, l) = self.latest_pairs(donor, 1)[0];
            remove.push((donor, m));
            add.push((root_mid, m));
            if i == others.len() - 1 {
                add.push((l, root_leaf));
            }
        }
        Plan {
            remove,
            add,
            params,
        }
    }

    /// One pair per donor becomes the ten-vertex double star under `hub`:
    /// the first pair supplies the root and its degree-3 child, two pairs
    /// hang under each.
    fn assemble_double_star(
        &self,
        hub: usize,
        donors: [usize; 5],
        params: BTreeMap<String, f64>,
    ) -> Plan {
        let cuts: Vec<(usize, usize)> = donors
            .iter()
            .map(|&d| self.latest_pairs(d, 1)[0])
            .collect();
        let (root, inner) = cuts[0];
        let remove: Vec<(usize, usize)> = donors
            .iter()
            .zip(&cuts)
            .map(|(&d, &(m, _))| (d, m))
            .collect();
        let add = vec![
            (hub, root),
            (root, cuts[1].0),
            (root, cuts[2].0),
            (inner, cuts[3].0),
            (inner, cuts[4].0),
        ];
        Plan {
            remove,
            add,
            params,
        }
    }
}
