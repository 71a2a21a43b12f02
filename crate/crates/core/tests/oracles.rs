mod common;

use common::*;
use std::collections::BTreeSet;
use tmc_core::graph::{canonical_form, enumerate_connected, graph6_decode, graph6_encode};
use tmc_core::solvers::{max_leaf_spanning_tree, tmc_exact, Mode};

#[test]
fn exact_solver_matches_brute_force_colorings() {
    let mut checked = 0;
    for line in ATLAS.lines() {
        let g = graph6_decode(line).unwrap();
        if g.size() + g.order() > 11 {
            continue;
        }
        let want = brute_tmc(&g);
        for mode in [Mode::Simple, Mode::Unrestricted] {
            if g.order() <= mode.max_order() {
                assert_eq!(tmc_exact(&g, mode).unwrap().value, want, "{line} {mode:?}");
            }
        }
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} graphs small enough");
}

#[test]
fn brute_oracle_sanity() {
    // K_3 gets all six colors; the path on three vertices only three.
    assert_eq!(brute_tmc(&graph6_decode("Bw").unwrap()), 6);
    assert_eq!(brute_tmc(&graph6_decode("Bg").unwrap()), 3);
}

#[test]
fn orbit_counts() {
    let want = [1, 1, 2, 6, 21, 112, 853, 11117];
    assert_eq!(connected_counts(8), want.map(|x| x as i128));
    assert_eq!(all_graph_count(4), 11);
}

#[test]
fn enumeration_matches_labeled_dedup() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_connected(n).unwrap().len(),
            dedup_connected_count(n),
            "n={n}"
        );
    }
}

#[test]
fn enumeration_matches_atlas() {
    for n in 1..=7 {
        let ours: BTreeSet<_> = enumerate_connected(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let theirs: BTreeSet<_> = atlas(n)
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(ours.len(), atlas(n).len(), "duplicates at n={n}");
        assert_eq!(ours, theirs, "n={n}");
    }
}

#[test]
fn leaf_numbers_match_tree_enumeration() {
    for n in 2..=6 {
        for g in atlas(n) {
            assert_eq!(
                max_leaf_spanning_tree(&g).unwrap().leaves,
                brute_max_leaves(&g),
                "{}",
                graph6_encode(&g)
            );
        }
    }
    let p = petersen();
    assert_eq!(brute_max_leaves(&p), 6);
    assert_eq!(max_leaf_spanning_tree(&p).unwrap().leaves, 6);
}

#[test]
fn graph6_corpus_against_reference_facts() {
    let facts: Vec<serde_json::Value> = CORPUS_FACTS
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let lines: Vec<&str> = CORPUS.lines().collect();
    assert_eq!(lines.len(), 1000);
    for (line, fact) in lines.iter().zip(&facts) {
        let g = graph6_decode(line).unwrap();
        assert_eq!(graph6_encode(&g), *line);
        assert_eq!(g.order() as u64, fact["n"].as_u64().unwrap(), "{line}");
        assert_eq!(g.size() as u64, fact["m"].as_u64().unwrap(), "{line}");
        let degrees: Vec<u64> = (0..g.order()).map(|v| g.degree(v) as u64).collect();
        let want: Vec<u64> = fact["degrees"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d.as_u64().unwrap())
            .collect();
        assert_eq!(degrees, want, "{line}");
        if let Some(edges) = fact.get("edges") {
            let ours: Vec<[usize; 2]> = g.edges().iter().map(|e| [e.u(), e.v()]).collect();
            let theirs: Vec<[usize; 2]> = serde_json::from_value(edges.clone()).unwrap();
            assert_eq!(ours, theirs, "{line}");
        }
    }
}
