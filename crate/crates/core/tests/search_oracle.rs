//! The pruned, normalized search against an unpruned scan of every vector.

use std::collections::BTreeSet;

use itertools::Itertools;
use qmds::circulant::{check_candidate, CirculantCandidate};
use qmds::search::{normalize, search, SearchConfig};
use qmds::{Elem, Field};

fn brute_force(q: u32, k: usize) -> (BTreeSet<Vec<Elem>>, Vec<Vec<Elem>>) {
    let f = Field::for_q(q).unwrap();
    let cfg = SearchConfig::new(&f, k);
    let mut canonical = BTreeSet::new();
    let mut raw = Vec::new();
    for x in (0..k).map(|_| f.nonzero()).multi_cartesian_product() {
        let c = CirculantCandidate::new(&f, x.clone()).unwrap();
        if check_candidate(&c).passed() {
            canonical.insert(normalize(&x, &cfg).unwrap());
            raw.push(x);
        }
    }
    (canonical, raw)
}

fn compare(q: u32, k: usize) {
    let f = Field::for_q(q).unwrap();
    let (expected, raw) = brute_force(q, k);
    let found = search(&SearchConfig::new(&f, k)).unwrap();
    let found_set: BTreeSet<Vec<Elem>> = found.solutions.iter().cloned().collect();
    assert_eq!(found_set, expected);
    // every passing vector is a rescaled rotation of some solution
    assert!(raw.len() >= found.solutions.len());
    assert!(!expected.is_empty());
}

#[test]
fn q3_k5_matches_unnormalized_scan() {
    compare(3, 5);
}

#[test]
fn q4_k5_matches_unnormalized_scan() {
    compare(4, 5);
}

#[test]
fn q3_k4_matches_unnormalized_scan() {
    let (expected, _) = brute_force(3, 4);
    let f = Field::for_q(3).unwrap();
    let found = search(&SearchConfig::new(&f, 4)).unwrap();
    assert_eq!(
        found.solutions.into_iter().collect::<BTreeSet<_>>(),
        expected
    );
}

#[test]
fn symmetric_solutions_are_unconstrained_solutions() {
    let f = Field::for_q(4).unwrap();
    let sym = search(&SearchConfig::new(&f, 5).symmetric(true)).unwrap();
    let all = search(&SearchConfig::new(&f, 5)).unwrap();
    let cfg = SearchConfig::new(&f, 5);
    for x in &sym.solutions {
        assert_eq!(x[1], x[4]);
        assert_eq!(x[2], x[3]);
        assert!(all.solutions.contains(&normalize(x, &cfg).unwrap()));
    }
}

#[test]
fn equality_constraint_filters_solutions() {
    let f = Field::for_q(4).unwrap();
    let mut cfg = SearchConfig::new(&f, 5);
    cfg.equalities = vec![(2, 3)];
    let r = search(&cfg).unwrap();
    assert_eq!(r.space, 15u128.pow(3));
    assert!(r.solutions.iter().all(|x| x[1] == x[2]));
}

/// The full (q=5, k=7) search, about 1.9·10^8 candidates.
#[test]
#[ignore = "long-running; run with --ignored"]
fn q5_k7_full_search_finds_witness() {
    let f = Field::for_q(5).unwrap();
    let cfg = SearchConfig::new(&f, 7).workers(4);
    let r = search(&cfg).unwrap();
    let w = f.parse_vector("e^10,e^10,e^0,e^6,e^3,e^6,e^0").unwrap();
    assert!(r.solutions.contains(&normalize(&w, &cfg).unwrap()));
}
