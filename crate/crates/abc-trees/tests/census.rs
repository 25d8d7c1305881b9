//! Cross-validation of the three tree generators against each other: the
//! unlabeled enumeration, the labeled (code-based) enumeration, and the
//! canonical form that bridges them.

use std::collections::BTreeSet;

use abc_trees::enumerate::{encode, free_tree_count, free_trees, labeled_trees_with_degrees, PruferCode};
use abc_trees::greedy::degree_sequences;
use abc_trees::{canonical_form, LevelSequence, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Backtracking isomorphism test, independent of the canonical form.
fn isomorphic(a: &Tree, b: &Tree) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut da = a.degrees().to_vec();
    let mut db = b.degrees().to_vec();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let adj_a = a.adjacency();
    let adj_b = b.adjacency();
    let n = a.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        v: usize,
        adj_a: &[Vec<usize>],
        adj_b: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] || adj_a[v].len() != adj_b[w].len() {
                continue;
            }
            // Every already-mapped neighbor of v must map into b's
            // neighborhood of w, and non-neighbors must stay out.
            let consistent = (0..v).all(|u| {
                let a_edge = adj_a[v].binary_search(&u).is_ok();
                let b_edge = adj_b[w].binary_search(&map[u]).is_ok();
                a_edge == b_edge
            });
            if consistent {
                map[v] = w;
                used[w] = true;
                if extend(v + 1, adj_a, adj_b, map, used) {
                    return true;
                }
                map[v] = usize::MAX;
                used[w] = false;
            }
        }
        false
    }

    extend(0, &adj_a, &adj_b, &mut map, &mut used)
}

#[test]
fn unlabeled_enumeration_matches_the_counting_formula() {
    for n in 1..=12 {
        let enumerated = free_trees(n).unwrap().count() as u128;
        assert_eq!(enumerated, free_tree_count(n).unwrap(), "order {n}");
    }
}

#[test]
fn unlabeled_enumeration_has_no_isomorphic_duplicates() {
    for n in 1..=10 {
        let forms: BTreeSet<LevelSequence> = free_trees(n)
            .unwrap()
            .map(|t| canonical_form(&t))
            .collect();
        assert_eq!(forms.len() as u128, free_tree_count(n).unwrap(), "order {n}");
    }
}

/// Labeled trees stratified by degree sequence, then deduplicated by
/// canonical form, must rediscover exactly the unlabeled census: every
/// isomorphism class has some labeling with sorted degrees, so no class
/// can hide from the stratification.
#[test]
fn labeled_census_collapses_to_the_unlabeled_one() {
    for n in 4..=10 {
        let mut forms: BTreeSet<LevelSequence> = BTreeSet::new();
        for cand in degree_sequences(n, false).unwrap() {
            let before = forms.len();
            let mut labeled = 0u64;
            for t in labeled_trees_with_degrees(&cand.ds).unwrap() {
                forms.insert(canonical_form(&t));
                labeled += 1;
            }
            assert!(labeled > 0, "order {n}: no labeling for {:?}", cand.ds);
            assert!(forms.len() > before, "order {n}: no new class from {:?}", cand.ds);
        }
        assert_eq!(forms.len() as u128, free_tree_count(n).unwrap(), "order {n}");
    }
}

#[test]
fn canonical_forms_round_trip_through_reconstruction() {
    for n in 1..=9 {
        for t in free_trees(n).unwrap() {
            let form = canonical_form(&t);
            let rebuilt = Tree::from_level_sequence(&form);
            assert_eq!(rebuilt.n(), t.n());
            assert_eq!(canonical_form(&rebuilt), form);
        }
    }
}

#[test]
fn equal_canonical_forms_mean_isomorphic_and_vice_versa() {
    for n in [6, 7, 8] {
        let trees: Vec<Tree> = free_trees(n).unwrap().collect();
        for (i, a) in trees.iter().enumerate() {
            for b in &trees[i..] {
                let same_form = canonical_form(a) == canonical_form(b);
                assert_eq!(same_form, isomorphic(a, b), "order {n}");
            }
        }
    }
}

#[test]
fn codes_round_trip_through_their_trees() {
    // Exhaustive through order 6, sampled beyond.
    for n in 3..=6 {
        let mut entries = vec![0usize; n - 2];
        loop {
            let code = PruferCode::new(n, entries.clone()).unwrap();
            assert_eq!(encode(&code.decode()).unwrap().entries(), code.entries());
            let mut pos = 0;
            loop {
                if pos == entries.len() {
                    break;
                }
                entries[pos] += 1;
                if entries[pos] < n {
                    break;
                }
                entries[pos] = 0;
                pos += 1;
            }
            if pos == entries.len() {
                break;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    for _ in 0..500 {
        let n = rng.gen_range(7..=40);
        let code = PruferCode::random(n, &mut rng).unwrap();
        assert_eq!(encode(&code.decode()).unwrap().entries(), code.entries());
    }
}
