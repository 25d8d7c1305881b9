//! Constructed trees containing each transformation kind's configuration.
//!
//! The sweep verifier and the tests use these builders to probe the closed
//! forms across hub degrees and branch sizes. Every builder roots the tree
//! at a fixed hub so breadth-first orientation — and therefore role
//! assignment — is deterministic.
//!
//! All builders panic on arguments that cannot produce the advertised
//! shape; they are verification scaffolding, not a general construction
//! API.

use crate::graph::tree::Tree;

/// Incrementally grown edge list with a vertex counter.
struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    fn new() -> Self {
        Builder {
            edges: Vec::new(),
            next: 0,
        }
    }

    fn vertex(&mut self) -> usize {
        let v = self.next;
        self.next += 1;
        v
    }

    fn child(&mut self, parent: usize) -> usize {
        let v = self.vertex();
        self.edges.push((parent, v));
        v
    }

    /// Pendant 2-path (midpoint plus leaf) hanging from `parent`.
    fn pendant_pair(&mut self, parent: usize) {
        let mid = self.child(parent);
        self.child(mid);
    }

    /// Degree filler for hubs whose degree the surgery changes: pendant
    /// pairs keep every filler edge at weight 1/sqrt(2) regardless of the
    /// hub degree, so omitting them from a closed form stays sound. Leaves
    /// would not be: their edge weight rises with the hub degree.
    fn pendant_pairs(&mut self, parent: usize, count: usize) {
        for _ in 0..count {
            self.pendant_pair(parent);
        }
    }

    /// B_k branch below `parent`; returns the branch root.
    fn branch(&mut self, parent: usize, k: usize) -> usize {
        let root = self.child(parent);
        for _ in 0..k {
            self.pendant_pair(root);
        }
        root
    }

    fn leaves(&mut self, parent: usize, count: usize) {
        for _ in 0..count {
            self.child(parent);
        }
    }

    fn finish(self, root: usize) -> Tree {
        Tree::new(self.next, self.edges)
            .expect("builder produces a tree")
            .with_root(root)
            .expect("root is a builder vertex")
    }
}

/// Root hub of degree `du` carrying a B_1 branch, a B_k branch (`k >= 5`),
/// and leaves.
pub fn pro05(du: usize, k: usize) -> Tree {
    assert!(du >= 2, "hub needs both branch children");
    assert!(k >= 5, "the shrinking branch must be B_5 or larger");
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, 1);
    b.branch(hub, k);
    b.leaves(hub, du - 2);
    b.finish(hub)
}

/// Hub of degree `du` carrying a B_1 branch, a B_4 branch, and leaves.
/// With `parent_degree` set, the hub hangs under a root of that degree;
/// otherwise the hub is the root.
pub fn b1_b4_hub(du: usize, parent_degree: Option<usize>) -> Tree {
    let mut b = Builder::new();
    match parent_degree {
        None => {
            assert!(du >= 2, "hub needs both branch children");
            let hub = b.vertex();
            b.branch(hub, 1);
            b.branch(hub, 4);
            b.leaves(hub, du - 2);
            b.finish(hub)
        }
        Some(dx) => {
            assert!(du >= 3, "hub needs a parent and both branch children");
            assert!(dx >= 1, "parent needs the hub edge");
            let root = b.vertex();
            let hub = b.child(root);
            b.leaves(root, dx - 1);
            b.branch(hub, 1);
            b.branch(hub, 4);
            b.leaves(hub, du - 3);
            b.finish(root)
        }
    }
}

/// Root hub of degree `du` carrying a B_2 branch, a B_4 branch, and leaves.
pub fn b2_b4_hub(du: usize) -> Tree {
    assert!(du >= 2, "hub needs both branch children");
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, 2);
    b.branch(hub, 4);
    b.leaves(hub, du - 2);
    b.finish(hub)
}

/// Three B_{>=5} branches split across two hubs: the solo hub is the root
/// (degree `solo_deg`, one branch of size `ks[0]`); the pair hub is its
/// child (degree `pair_deg`, branches of sizes `ks[1]` and `ks[2]`).
pub fn triple_split(solo_deg: usize, pair_deg: usize, ks: [usize; 3]) -> Tree {
    assert!(solo_deg >= 2, "solo hub needs its branch and the pair hub");
    assert!(pair_deg >= 3, "pair hub needs a parent and two branches");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    let mut b = Builder::new();
    let solo = b.vertex();
    b.branch(solo, ks[0]);
    let pair = b.child(solo);
    // The solo hub's degree never changes, so leaves are fine there; the
    // pair hub grows by one, so its fillers must be pendant pairs.
    b.leaves(solo, solo_deg - 2);
    b.branch(pair, ks[1]);
    b.branch(pair, ks[2]);
    b.pendant_pairs(pair, pair_deg - 3);
    b.finish(solo)
}

/// Three B_{>=5} branches under a single root hub of degree `du`.
pub fn triple_common(du: usize, ks: [usize; 3]) -> Tree {
    assert!(du >= 3, "hub needs three branch children");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    let mut b = Builder::new();
    let hub = b.vertex();
    for k in ks {
        b.branch(hub, k);
    }
    b.pendant_pairs(hub, du - 3);
    b.finish(hub)
}

/// Two B_{>=5} branches under different hubs; the secondary hub also holds
/// a recipient branch. The root holds the `ks[0]` branch and has degree
/// `du1 >= du2`; its child hub holds the `ks[1]` branch, a B_r branch with
/// `r = recipient_k`, and leaves, for degree `du2`.
pub fn two_split_recipient(du1: usize, du2: usize, ks: [usize; 2], recipient_k: usize) -> Tree {
    assert!(du1 >= du2, "the secondary hub must not outrank the root");
    assert!(du1 >= 2 && du2 >= 3, "hubs need their branch children");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    assert!(
        recipient_k == 2 || recipient_k == 3,
        "recipient must be a B_2 or B_3 root"
    );
    let mut b = Builder::new();
    let u1 = b.vertex();
    b.branch(u1, ks[0]);
    let u2 = b.child(u1);
    b.leaves(u1, du1 - 2);
    b.branch(u2, ks[1]);
    b.branch(u2, recipient_k);
    b.leaves(u2, du2 - 3);
    b.finish(u1)
}

/// Like [`two_split_recipient`], but every other child of the secondary hub
/// is a B_4 root (no leaves, no recipient), as the four-donor star kinds
/// require.
pub fn two_split_star(du1: usize, du2: usize, ks: [usize; 2]) -> Tree {
    assert!(du1 >= du2, "the secondary hub must not outrank the root");
    assert!(du1 >= 2 && du2 >= 4, "hubs need branch children and two donors");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    let mut b = Builder::new();
    let u1 = b.vertex();
    b.branch(u1, ks[0]);
    let u2 = b.child(u1);
    b.leaves(u1, du1 - 2);
    b.branch(u2, ks[1]);
    for _ in 0..du2 - 2 {
        b.branch(u2, 4);
    }
    b.finish(u1)
}

/// Two B_{>=5} branches plus a recipient branch under a single root hub of
/// degree `du`.
pub fn two_common_recipient(du: usize, ks: [usize; 2], recipient_k: usize) -> Tree {
    assert!(du >= 3, "hub needs two branches and the recipient");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    assert!(
        recipient_k == 2 || recipient_k == 3,
        "recipient must be a B_2 or B_3 root"
    );
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, ks[0]);
    b.branch(hub, ks[1]);
    b.branch(hub, recipient_k);
    b.leaves(hub, du - 3);
    b.finish(hub)
}

/// Two B_{>=5} branches under a root hub of degree `du` whose remaining
/// children are all B_4 roots.
pub fn two_common_star(du: usize, ks: [usize; 2]) -> Tree {
    assert!(du >= 4, "hub needs two branches and two donors");
    assert!(ks.iter().all(|&k| k >= 5), "branches must be B_5 or larger");
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, ks[0]);
    b.branch(hub, ks[1]);
    for _ in 0..du - 2 {
        b.branch(hub, 4);
    }
    b.finish(hub)
}

/// One B_k branch (`k >= 5`) plus a recipient branch under a root hub of
/// degree `du`, the rest leaves.
pub fn single_recipient(du: usize, k: usize, recipient_k: usize) -> Tree {
    assert!(du >= 2, "hub needs the branch and the recipient");
    assert!(k >= 5, "the donor branch must be B_5 or larger");
    assert!(
        recipient_k == 2 || recipient_k == 3,
        "recipient must be a B_2 or B_3 root"
    );
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, k);
    b.branch(hub, recipient_k);
    b.leaves(hub, du - 2);
    b.finish(hub)
}

/// One B_k branch (`k >= 5`) under a root hub of degree `du` whose other
/// children are all B_4 roots.
pub fn single_star(du: usize, k: usize) -> Tree {
    assert!(du >= 4, "hub needs the branch and three donors");
    assert!(k >= 5, "the donor branch must be B_5 or larger");
    let mut b = Builder::new();
    let hub = b.vertex();
    b.branch(hub, k);
    for _ in 0..du - 1 {
        b.branch(hub, 4);
    }
    b.finish(hub)
}

/// Exactly five B_4 branches split across two hubs: `x` under the root
/// (degree `du1 >= du2`), the remaining `5 - x` under its child hub
/// (degree `du2`), whose filler children are B_3 roots so every edge at
/// the hub shrinks when its degree grows.
pub fn thm4_split(du1: usize, du2: usize, x: usize) -> Tree {
    assert!((1..=4).contains(&x), "the split must leave 1..=4 donors on each hub");
    assert!(du1 >= du2, "the secondary hub must not outrank the root");
    assert!(du1 > x, "root needs its donors and the hub edge");
    assert!(du2 >= 6 - x, "hub needs a parent and 5 - x donors");
    let mut b = Builder::new();
    let u1 = b.vertex();
    for _ in 0..x {
        b.branch(u1, 4);
    }
    let u2 = b.child(u1);
    b.leaves(u1, du1 - x - 1);
    for _ in 0..5 - x {
        b.branch(u2, 4);
    }
    for _ in 0..du2 - (6 - x) {
        b.branch(u2, 3);
    }
    b.finish(u1)
}

/// Exactly five B_4 branches under a single root hub of degree `du`; filler
/// children are B_3 roots for the same reason as in [`thm4_split`].
pub fn thm4_common(du: usize) -> Tree {
    assert!(du >= 5, "hub needs five donors");
    let mut b = Builder::new();
    let hub = b.vertex();
    for _ in 0..5 {
        b.branch(hub, 4);
    }
    for _ in 0..du - 5 {
        b.branch(hub, 3);
    }
    b.finish(hub)
}
