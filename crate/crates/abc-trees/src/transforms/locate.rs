//! Locating the configurations each transformation kind requires.

use serde::{Deserialize, Serialize};

use super::kind::TransformKind;
use crate::graph::paths::{detect_branches, BranchProfile};
use crate::graph::tree::Tree;

/// Where a transformation applies. Vertex roles are named from the surgery's
/// point of view; the [`TransformKind`] variants describe what happens at
/// each shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Location {
    /// A hub whose `shrink` branch child loses pendant paths while its
    /// `grow` branch child absorbs them (Pro05, Ta1, Tb).
    BranchPair { hub: usize, shrink: usize, grow: usize },
    /// A hub handing its entire `moved` branch child to its `target`
    /// branch child (Ta2).
    BranchHandoff { hub: usize, moved: usize, target: usize },
    /// Three big-branch roots: one under `solo_parent`, two under
    /// `pair_parent`; the star assembled from the cuts lands on the pair
    /// parent (T11, T12).
    TripleSplit {
        solo_parent: usize,
        solo_root: usize,
        pair_parent: usize,
        pair_roots: [usize; 2],
    },
    /// Three big-branch roots under one parent (T13).
    TripleCommon { parent: usize, roots: [usize; 3] },
    /// One pendant path moves from `donor` to `recipient`, both children of
    /// `hub` (T211, T221, T31).
    DonorRecipient { hub: usize, donor: usize, recipient: usize },
    /// Four donors give one pendant path each; the star built from the cuts
    /// attaches to `hub` and `donors[0]` supplies its root (T212, T222,
    /// T32). The first donor need not be a child of `hub`.
    StarFour { hub: usize, donors: [usize; 4] },
    /// Five donors give one pendant path each; the double star attaches to
    /// `hub` and `donors[0]` supplies its root (T1Thm4, T2Thm4).
    FiveSplit { hub: usize, donors: [usize; 5] },
}

/// Every location where `kind` applies, in deterministic order (ascending
/// hub id for the per-hub kinds; at most one location for the global kinds).
///
/// Selection conventions, applied under the tree's stored root or its
/// canonical center:
///
/// * "last k" candidates are those latest in breadth-first discovery order;
/// * when two parents could serve as the primary hub, the larger degree
///   wins, with earlier discovery breaking ties;
/// * branch roots are ordered by degree, then by later discovery.
pub fn find_configuration(t: &Tree, kind: TransformKind) -> Vec<Location> {
    let profile = detect_branches(t);
    let ranks = profile.discovery_ranks();
    let finder = Finder {
        t,
        adj: t.adjacency(),
        profile,
        ranks,
    };
    finder.run(kind)
}

struct Finder<'a> {
    t: &'a Tree,
    adj: Vec<Vec<usize>>,
    profile: BranchProfile,
    ranks: Vec<usize>,
}

impl Finder<'_> {
    fn run(&self, kind: TransformKind) -> Vec<Location> {
        match kind {
            TransformKind::Pro05 => self.branch_pairs(kind),
            TransformKind::Ta1 => self.branch_pairs(kind),
            TransformKind::Ta2 => self.branch_pairs(kind),
            TransformKind::Tb => self.branch_pairs(kind),
            TransformKind::T11 | TransformKind::T12 | TransformKind::T13 => {
                self.triple(kind).into_iter().collect()
            }
            TransformKind::T211
            | TransformKind::T212
            | TransformKind::T221
            | TransformKind::T222 => self.double(kind).into_iter().collect(),
            TransformKind::T31 | TransformKind::T32 => self.single(kind).into_iter().collect(),
            TransformKind::T1Thm4 | TransformKind::T2Thm4 => {
                self.five(kind).into_iter().collect()
            }
        }
    }

    fn children(&self, v: usize) -> Vec<usize> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| w != self.profile.parent[v])
            .collect()
    }

    /// Children of `hub` that root a B_k branch with `lo <= k <= hi`.
    fn branch_children(&self, hub: usize, lo: usize, hi: usize) -> Vec<usize> {
        self.children(hub)
            .into_iter()
            .filter(|&c| matches!(self.profile.branch_kind[c], Some(k) if k >= lo && k <= hi))
            .collect()
    }

    /// The candidate latest in breadth-first discovery.
    fn last_by_rank(&self, items: &[usize]) -> Option<usize> {
        items.iter().copied().max_by_key(|&v| self.ranks[v])
    }

    /// Order branch roots: degree descending, later discovery first on ties.
    fn role_sort(&self, items: &mut [usize]) {
        items.sort_by_key(|&v| (std::cmp::Reverse(self.t.degree(v)), std::cmp::Reverse(self.ranks[v])));
    }

    /// Primary-hub comparison: larger degree, then earlier discovery.
    fn hub_outranks(&self, a: usize, b: usize) -> bool {
        let (da, db) = (self.t.degree(a), self.t.degree(b));
        da > db || (da == db && self.ranks[a] < self.ranks[b])
    }

    /// Hubs carrying both branch children required by a two-branch kind.
    fn branch_pairs(&self, kind: TransformKind) -> Vec<Location> {
        // (big-branch k range, small branch k, hub degree range)
        let (big_lo, big_hi, small_k, deg_lo, deg_hi) = match kind {
            TransformKind::Pro05 => (5, usize::MAX, 1, 0, usize::MAX),
            TransformKind::Ta1 => (4, 4, 1, 0, 241),
            TransformKind::Ta2 => (4, 4, 1, 242, usize::MAX),
            TransformKind::Tb => (4, 4, 2, 0, usize::MAX),
            _ => unreachable!("not a branch-pair kind"),
        };
        let mut out = Vec::new();
        for hub in 0..self.t.n() {
            let d = self.t.degree(hub);
            if d < deg_lo || d > deg_hi {
                continue;
            }
            let big = self.branch_children(hub, big_lo, big_hi);
            let small = self.branch_children(hub, small_k, small_k);
            if let (Some(big), Some(small)) = (self.last_by_rank(&big), self.last_by_rank(&small))
            {
                out.push(if kind == TransformKind::Ta2 {
                    Location::BranchHandoff {
                        hub,
                        moved: small,
                        target: big,
                    }
                } else {
                    Location::BranchPair {
                        hub,
                        shrink: big,
                        grow: small,
                    }
                });
            }
        }
        out
    }

    /// All B_{>=5} roots, ascending by discovery rank.
    fn big_roots(&self) -> Vec<usize> {
        let mut roots = self.profile.roots_at_least(5);
        roots.sort_by_key(|&v| self.ranks[v]);
        roots
    }

    fn triple(&self, kind: TransformKind) -> Option<Location> {
        let big = self.big_roots();
        if big.len() < 3 {
            return None;
        }
        let last3 = &big[big.len() - 3..];
        let parents: Vec<usize> = {
            let mut ps: Vec<usize> = last3.iter().map(|&v| self.profile.parent[v]).collect();
            ps.sort_unstable();
            ps.dedup();
            ps
        };
        match parents.len() {
            1 if kind == TransformKind::T13 => {
                let mut roots = last3.to_vec();
                self.role_sort(&mut roots);
                Some(Location::TripleCommon {
                    parent: parents[0],
                    roots: [roots[0], roots[1], roots[2]],
                })
            }
            2 if kind != TransformKind::T13 => {
                let (pa, pb) = (parents[0], parents[1]);
                let under = |p: usize| -> Vec<usize> {
                    last3
                        .iter()
                        .copied()
                        .filter(|&v| self.profile.parent[v] == p)
                        .collect()
                };
                let (solo_parent, pair_parent) = if under(pa).len() == 1 {
                    (pa, pb)
                } else {
                    (pb, pa)
                };
                // T11 handles a solo parent at least as large as the pair
                // parent; T12 the strictly-larger pair parent.
                let solo_heavy = self.t.degree(solo_parent) >= self.t.degree(pair_parent);
                if solo_heavy != (kind == TransformKind::T11) {
                    return None;
                }
                let solo_root = under(solo_parent)[0];
                let mut pair = under(pair_parent);
                self.role_sort(&mut pair);
                Some(Location::TripleSplit {
                    solo_parent,
                    solo_root,
                    pair_parent,
                    pair_roots: [pair[0], pair[1]],
                })
            }
            _ => None,
        }
    }

    /// Recipient for the single-path moves: the hub's latest B_2/B_3 child.
    fn recipient(&self, hub: usize) -> Option<usize> {
        self.last_by_rank(&self.branch_children(hub, 2, 3))
    }

    /// For the star kinds: the hub's children other than `keep` must all be
    /// B_4 roots; returns the `count` latest of them.
    fn b4_battery(&self, hub: usize, keep: &[usize], count: usize) -> Option<Vec<usize>> {
        let mut b4 = Vec::new();
        for c in self.children(hub) {
            if keep.contains(&c) {
                continue;
            }
            if self.profile.branch_kind[c] == Some(4) {
                b4.push(c);
            } else {
                return None;
            }
        }
        if b4.len() < count {
            return None;
        }
        b4.sort_by_key(|&v| std::cmp::Reverse(self.ranks[v]));
        b4.truncate(count);
        Some(b4)
    }

    fn double(&self, kind: TransformKind) -> Option<Location> {
        let big = self.big_roots();
        let [a, b] = big[..] else { return None };
        let (pa, pb) = (self.profile.parent[a], self.profile.parent[b]);
        if pa != pb {
            // Roles follow the parents: the secondary hub (smaller degree,
            // later discovery on ties) is operated on.
            let (v1, u2, v2) = if self.hub_outranks(pa, pb) {
                (a, pb, b)
            } else {
                (b, pa, a)
            };
            match kind {
                TransformKind::T211 => self.recipient(u2).map(|r| Location::DonorRecipient {
                    hub: u2,
                    donor: v2,
                    recipient: r,
                }),
                TransformKind::T212 => {
                    self.b4_battery(u2, &[v2], 2).map(|w| Location::StarFour {
                        hub: u2,
                        donors: [v1, v2, w[0], w[1]],
                    })
                }
                _ => None,
            }
        } else {
            let mut roots = vec![a, b];
            self.role_sort(&mut roots);
            match kind {
                TransformKind::T221 => self.recipient(pa).map(|r| Location::DonorRecipient {
                    hub: pa,
                    donor: roots[0],
                    recipient: r,
                }),
                TransformKind::T222 => {
                    self.b4_battery(pa, &roots, 2).map(|w| Location::StarFour {
                        hub: pa,
                        donors: [roots[0], roots[1], w[0], w[1]],
                    })
                }
                _ => None,
            }
        }
    }

    fn single(&self, kind: TransformKind) -> Option<Location> {
        let big = self.big_roots();
        let [v1] = big[..] else { return None };
        let hub = self.profile.parent[v1];
        match kind {
            TransformKind::T31 => self.recipient(hub).map(|r| Location::DonorRecipient {
                hub,
                donor: v1,
                recipient: r,
            }),
            TransformKind::T32 => self.b4_battery(hub, &[v1], 3).map(|w| Location::StarFour {
                hub,
                donors: [v1, w[0], w[1], w[2]],
            }),
            _ => None,
        }
    }

    fn five(&self, kind: TransformKind) -> Option<Location> {
        let mut b4 = self.profile.roots_of(4);
        if b4.len() <= 4 {
            return None;
        }
        b4.sort_by_key(|&v| self.ranks[v]);
        let mut last5 = b4[b4.len() - 5..].to_vec();
        // Latest-discovered first; with equal degrees this is the role order.
        last5.reverse();
        let parents: Vec<usize> = {
            let mut ps: Vec<usize> = last5.iter().map(|&v| self.profile.parent[v]).collect();
            ps.sort_unstable();
            ps.dedup();
            ps
        };
        match parents.len() {
            1 if kind == TransformKind::T2Thm4 => Some(Location::FiveSplit {
                hub: parents[0],
                donors: [last5[0], last5[1], last5[2], last5[3], last5[4]],
            }),
            2 if kind == TransformKind::T1Thm4 => {
                let (pa, pb) = (parents[0], parents[1]);
                let hub = if self.hub_outranks(pa, pb) { pb } else { pa };
                Some(Location::FiveSplit {
                    hub,
                    donors: [last5[0], last5[1], last5[2], last5[3], last5[4]],
                })
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_kragujevac;
    use crate::transforms::instances;

    #[test]
    fn hub_with_b1_and_b5_matches_pro05() {
        let t = instances::pro05(6, 5);
        let locs = find_configuration(&t, TransformKind::Pro05);
        assert_eq!(locs.len(), 1);
        let Location::BranchPair { hub, shrink, grow } = locs[0] else {
            panic!("unexpected shape");
        };
        assert_eq!(hub, 0);
        assert_eq!(t.degree(shrink), 6);
        assert_eq!(t.degree(grow), 2);
    }

    #[test]
    fn kragujevac_2_2_2_matches_nothing() {
        let t = build_kragujevac(&[2, 2, 2]).unwrap();
        for kind in TransformKind::ALL {
            assert!(
                find_configuration(&t, kind).is_empty(),
                "{kind} unexpectedly matched"
            );
        }
    }

    #[test]
    fn five_b4_under_one_hub_matches_t2() {
        let t = instances::thm4_common(6);
        let locs = find_configuration(&t, TransformKind::T2Thm4);
        assert_eq!(locs.len(), 1);
        let Location::FiveSplit { hub, donors } = locs[0] else {
            panic!("unexpected shape");
        };
        assert_eq!(hub, 0);
        for d in donors {
            assert_eq!(t.degree(d), 5);
        }
        assert!(find_configuration(&t, TransformKind::T1Thm4).is_empty());
    }

    #[test]
    fn parent_degrees_split_t11_from_t12() {
        // Solo parent at least as large: T11 and only T11.
        let heavier_solo = instances::triple_split(8, 6, [5, 5, 5]);
        assert_eq!(find_configuration(&heavier_solo, TransformKind::T11).len(), 1);
        assert!(find_configuration(&heavier_solo, TransformKind::T12).is_empty());
        // Strictly larger pair parent: T12 and only T12.
        let heavier_pair = instances::triple_split(6, 8, [5, 5, 5]);
        assert!(find_configuration(&heavier_pair, TransformKind::T11).is_empty());
        assert_eq!(find_configuration(&heavier_pair, TransformKind::T12).len(), 1);
        // A tie goes to T11.
        let tied = instances::triple_split(7, 7, [5, 6, 7]);
        assert_eq!(find_configuration(&tied, TransformKind::T11).len(), 1);
        assert!(find_configuration(&tied, TransformKind::T12).is_empty());
    }

    #[test]
    fn hub_degree_gates_ta1_against_ta2() {
        let low = instances::b1_b4_hub(241, None);
        assert_eq!(find_configuration(&low, TransformKind::Ta1).len(), 1);
        assert!(find_configuration(&low, TransformKind::Ta2).is_empty());
        let high = instances::b1_b4_hub(242, Some(250));
        assert!(find_configuration(&high, TransformKind::Ta1).is_empty());
        let locs = find_configuration(&high, TransformKind::Ta2);
        assert_eq!(locs.len(), 1);
        let Location::BranchHandoff { hub, moved, target } = locs[0] else {
            panic!("unexpected shape");
        };
        assert_eq!(high.degree(hub), 242);
        assert_eq!(high.degree(moved), 2);
        assert_eq!(high.degree(target), 5);
    }

    #[test]
    fn mixed_children_block_the_star_kinds() {
        // The recipient kinds need a B_2/B_3 child; the star kinds need every
        // other child to be a B_4 root, so a single leaf child disqualifies.
        let with_leaf = instances::single_recipient(6, 5, 2);
        assert_eq!(find_configuration(&with_leaf, TransformKind::T31).len(), 1);
        assert!(find_configuration(&with_leaf, TransformKind::T32).is_empty());
        let all_b4 = instances::single_star(6, 5);
        assert!(find_configuration(&all_b4, TransformKind::T31).is_empty());
        assert_eq!(find_configuration(&all_b4, TransformKind::T32).len(), 1);
    }

    #[test]
    fn double_kinds_distinguish_parent_sharing() {
        let split = instances::two_split_recipient(7, 6, [5, 5], 2);
        assert_eq!(find_configuration(&split, TransformKind::T211).len(), 1);
        assert!(find_configuration(&split, TransformKind::T221).is_empty());
        let common = instances::two_common_recipient(7, [5, 5], 3);
        assert!(find_configuration(&common, TransformKind::T211).is_empty());
        let locs = find_configuration(&common, TransformKind::T221);
        assert_eq!(locs.len(), 1);
        let Location::DonorRecipient { recipient, .. } = locs[0] else {
            panic!("unexpected shape");
        };
        assert_eq!(common.degree(recipient), 4);
    }

    #[test]
    fn thm4_split_assigns_smaller_parent_as_hub() {
        for x in 1..=4 {
            let t = instances::thm4_split(9, 7, x);
            let locs = find_configuration(&t, TransformKind::T1Thm4);
            assert_eq!(locs.len(), 1, "x = {x}");
            let Location::FiveSplit { hub, .. } = locs[0] else {
                panic!("unexpected shape");
            };
            assert_eq!(t.degree(hub), 7, "x = {x}");
        }
    }
}
