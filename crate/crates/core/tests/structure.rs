mod common;

use common::*;
use num_bigint::BigUint;
use patternhom::{
    antichain_reduce, enumerate_chains, enumerate_clusters, list_clusters, occurrences,
    self_overlaps, Oracle, Permutation,
};

#[test]
fn cluster_engine_matches_brute_force() {
    for s in ["123", "132;231", "1324", "2413", "12;321", "1342"] {
        let p = set(s);
        let table = enumerate_clusters(&p, 7).unwrap();
        for n in 2..=7 {
            let row = brute_cluster_row(&p, n);
            for (q, &c) in row.iter().enumerate() {
                assert_eq!(table.get(n, q), BigUint::from(c), "{s} n={n} q={q}");
            }
        }
    }
}

#[test]
fn cluster_listing_has_valid_markings() {
    let p = set("123;1432");
    for c in list_clusters(&p, 7).unwrap() {
        let w = c.perm.as_slice();
        if c.q < 2 {
            continue;
        }
        assert_eq!(c.marked.len(), c.q - 1);
        assert_eq!(c.marked[0].0, 1);
        let (s, k) = *c.marked.last().unwrap();
        assert_eq!(s + k - 1, w.len());
        for pair in c.marked.windows(2) {
            let ((s1, k1), (s2, _)) = (pair[0], pair[1]);
            assert!(s1 < s2 && s2 < s1 + k1);
        }
        for &(s, k) in &c.marked {
            let occ = all_occurrences(&w[s - 1..s - 1 + k], p.patterns());
            assert!(occ.contains(&(0, k)));
        }
    }
}

/// A pattern overlaps itself in `j` entries exactly when two occurrences
/// fit into a permutation of length `2k - j`.
#[test]
fn overlap_profile_matches_exhaustive_search() {
    for k in 2..=5 {
        for_each_perm(k, |t| {
            let tau = Permutation::new(t.to_vec()).unwrap();
            let profile = self_overlaps(&tau).unwrap();
            for j in 1..k {
                let n = 2 * k - j;
                let mut witnessed = false;
                for_each_perm(n, |w| {
                    if !witnessed {
                        let sigma = Permutation::new(w.to_vec()).unwrap();
                        let occ = occurrences(&sigma, &tau);
                        witnessed = occ.contains(&1) && occ.contains(&(k - j + 1));
                    }
                });
                assert_eq!(profile.overlaps.contains(&j), witnessed, "{tau} j={j}");
            }
        });
    }
}

#[test]
fn overlap_free_patterns_never_occur_twice_in_short_words() {
    for k in 3..=5 {
        for_each_perm(k, |t| {
            let tau = Permutation::new(t.to_vec()).unwrap();
            if !self_overlaps(&tau).unwrap().is_overlap_free() {
                return;
            }
            for n in k..=2 * k - 2 {
                for_each_perm(n, |w| {
                    let sigma = Permutation::new(w.to_vec()).unwrap();
                    assert!(occurrences(&sigma, &tau).len() <= 1, "{tau} in {sigma}");
                });
            }
        });
    }
}

#[test]
fn antichain_reduction_keeps_avoiders() {
    let raws: [&[&str]; 5] = [
        &["12", "123"],
        &["132", "1432", "2143"],
        &["123", "1234", "4321", "321"],
        &["2413", "13524", "1324"],
        &["231", "2314", "3412", "12345"],
    ];
    for raw in raws {
        let pats: Vec<Permutation> = raw.iter().map(|s| perm(s)).collect();
        let reduced = antichain_reduce(pats.clone()).unwrap();
        let again = antichain_reduce(reduced.patterns().to_vec()).unwrap();
        assert_eq!(reduced, again);
        for n in 0..=8 {
            assert_eq!(
                Oracle::default().count_avoiders(&reduced, n).unwrap(),
                BigUint::from(brute_avoiders(&pats, n)),
                "{raw:?} n={n}"
            );
        }
    }
}

#[test]
fn symmetries_preserve_counts() {
    let o = Oracle::default();
    for s in ["1342", "2413;123", "1324", "12453", "132;4321"] {
        let p = set(s);
        let seq = o.avoider_sequence(&p, 8).unwrap();
        assert_eq!(seq, o.avoider_sequence(&p.reverse(), 8).unwrap());
        assert_eq!(seq, o.avoider_sequence(&p.complement(), 8).unwrap());
        // complement maps chains to chains
        assert_eq!(
            enumerate_chains(&p, 10).unwrap(),
            enumerate_chains(&p.complement(), 10).unwrap()
        );
        assert_eq!(
            enumerate_clusters(&p, 10).unwrap(),
            enumerate_clusters(&p.reverse(), 10).unwrap()
        );
    }
}

#[test]
fn larger_sets_have_fewer_avoiders() {
    let o = Oracle::default();
    let chain = ["1324", "1324;2143", "1324;2143;3412", "1324;2143;3412;123"];
    for pair in chain.windows(2) {
        let (small, large) = (set(pair[0]), set(pair[1]));
        for n in 0..=9 {
            assert!(o.count_avoiders(&large, n).unwrap() <= o.count_avoiders(&small, n).unwrap());
        }
    }
}
