mod common;

use std::collections::BTreeSet;

use common::*;
use gndb::balance::{self, classify, edge_partition};
use gndb::enumerate::{connected_graphs_upto, scan, ScanConfig, CONNECTED_CLASS_COUNTS};
use gndb::families::{complete, complete_bipartite, cycle};
use gndb::graph::{are_isomorphic, bfs_distances, canonical_form};
use gndb::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn corpus(n_max: usize) -> Vec<Graph> {
    connected_graphs_upto(n_max, 1).unwrap().into_iter().flatten().collect()
}

#[test]
fn labeled_brute_force_reproduces_class_counts() {
    for n in 1..=6 {
        let perms = permutations(n);
        let classes: BTreeSet<u64> = labeled_graphs(n)
            .filter(brute_connected)
            .map(|g| brute_canon(&g, &perms))
            .collect();
        assert_eq!(classes.len(), CONNECTED_CLASS_COUNTS[n], "n={n}");
    }
}

#[test]
fn enumerated_classes_match_brute_force_classes() {
    let levels = connected_graphs_upto(6, 1).unwrap();
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        let perms = permutations(n);
        let from_enum: BTreeSet<u64> = level.iter().map(|g| brute_canon(g, &perms)).collect();
        assert_eq!(from_enum.len(), level.len(), "duplicate class at n={n}");
        let from_labeled: BTreeSet<u64> = labeled_graphs(n)
            .filter(brute_connected)
            .map(|g| brute_canon(&g, &perms))
            .collect();
        assert_eq!(from_enum, from_labeled, "n={n}");
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let levels = connected_graphs_upto(6, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for (i, level) in levels.iter().enumerate() {
        let perms = permutations(i + 1);
        for a in level {
            for b in level {
                assert_eq!(are_isomorphic(a, b), brute_isomorphic(a, b, &perms));
            }
            let mut p: Vec<usize> = (0..a.n()).collect();
            p.shuffle(&mut rng);
            let shuffled = a.relabel(&p);
            assert!(brute_isomorphic(a, &shuffled, &perms));
            assert!(are_isomorphic(a, &shuffled));
        }
    }
}

#[test]
fn distances_match_floyd_warshall() {
    for g in corpus(7) {
        let fw = floyd_warshall(&g);
        let dm = g.distances();
        for u in 0..g.n() {
            assert_eq!(bfs_distances(&g, u).unwrap(), fw[u]);
            assert_eq!(dm.row(u), fw[u].as_slice());
        }
        for (u, v) in g.edges() {
            for x in 0..g.n() {
                let (a, b) = (dm.get(x, u).unwrap(), dm.get(x, v).unwrap());
                assert!(a.abs_diff(b) <= 1);
            }
        }
    }
}

#[test]
fn bipartite_iff_no_layer_parity_conflict() {
    // Odd cycle exists iff some edge joins two vertices at equal BFS depth
    // from the root of its component.
    for g in corpus(7) {
        let fw = floyd_warshall(&g);
        let odd = g.edges().any(|(u, v)| fw[0][u] == fw[0][v]);
        assert_eq!(g.is_bipartite(), !odd, "{}", gndb::codec::graph6::encode(&g));
    }
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
    assert!(!two_triangles.is_bipartite());
}

#[test]
fn edge_partitions_match_definition() {
    for g in corpus(7) {
        let fw = floyd_warshall(&g);
        let dm = g.distances();
        for (a, b) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
            let eb = edge_partition(&g, &dm, a, b).unwrap();
            assert_eq!((eb.w_ab, eb.w_ba, eb.eq_count), brute_w(&fw, a, b));
            assert_eq!(eb.d(0, 1), 1);
            assert_eq!(eb.d(1, 0), 1);
            assert!(eb.d_table.keys().all(|&(i, j)| i.abs_diff(j) <= 1));
            let sum = |f: &dyn Fn(usize, usize) -> bool| -> usize {
                eb.d_table.iter().filter(|(&(i, j), _)| f(i, j)).map(|(_, &c)| c).sum()
            };
            assert_eq!(eb.w_ab, sum(&|i, j| j == i + 1));
            assert_eq!(eb.w_ba, sum(&|i, j| i == j + 1));
            assert_eq!(eb.eq_count, sum(&|i, j| i == j && i >= 1));
        }
    }
}

#[test]
fn classification_matches_definition() {
    for g in corpus(7).into_iter().filter(|g| g.n() >= 2) {
        let class = classify(&g, &[1, 2, 3]).unwrap();
        for k in 1..=3u32 {
            assert_eq!(class.gamma(k), brute_gndb(&g, k as usize));
        }
        assert_eq!(class.ndb_gamma, class.gamma(1));
        assert_eq!(class.is_db, class.is_kgdb(1));
    }
}

#[test]
fn named_fixture_values() {
    // values computed by the definition-level oracle, not the crate
    assert_eq!(brute_gndb(&complete_bipartite(3, 9).unwrap(), 3), Some(3));
    assert_eq!(brute_gndb(&cycle(6).unwrap(), 1), Some(3));
    assert_eq!(brute_gndb(&cycle(6).unwrap(), 3), None);
    let k412 = complete_bipartite(4, 12).unwrap();
    assert_eq!(brute_gndb(&k412, 3), Some(4));
    assert_eq!(balance::degree_ratio_holds(&k412, 3), Ok(true));

    for n in 1..=5 {
        let g = complete_bipartite(n, 3 * n).unwrap();
        assert_eq!(brute_gndb(&g, 3), Some(n));
        assert_eq!(classify(&g, &[3]).unwrap().gamma(3), Some(n));
        assert_eq!(balance::order_equals_expected(&g, 3, n), Ok(true));
    }
    for n in 2..=8 {
        let g = complete(n).unwrap();
        assert_eq!(brute_gndb(&g, 1), Some(1));
        assert_eq!(classify(&g, &[1]).unwrap().ndb_gamma, Some(1));
    }
    for m in 2..=4 {
        let g = cycle(2 * m).unwrap();
        assert_eq!(brute_gndb(&g, 1), Some(m));
        assert_eq!(classify(&g, &[1]).unwrap().ndb_gamma, Some(m));
    }
}

#[test]
fn scan_k1_matches_brute_force_ndb() {
    let report = scan(&ScanConfig::new(6, &[1])).unwrap();
    let found: BTreeSet<String> = report.matches.iter().map(|m| m.graph6.clone()).collect();
    let expected: BTreeSet<String> = corpus(6)
        .into_iter()
        .filter(|g| g.n() >= 2 && brute_gndb(g, 1).is_some())
        .map(|g| String::from_utf8(canonical_form(&g)).unwrap())
        .collect();
    assert_eq!(found, expected);
    for g in (2..=6).map(|n| complete(n).unwrap()).chain([cycle(4).unwrap(), cycle(6).unwrap()]) {
        let code = String::from_utf8(canonical_form(&g)).unwrap();
        assert!(found.contains(&code), "{code}");
    }
    // every match is DB edge by edge
    for m in &report.matches {
        let g = gndb::codec::graph6::decode(&m.graph6).unwrap();
        let fw = floyd_warshall(&g);
        for (a, b) in g.edges() {
            let (ab, ba, _) = brute_w(&fw, a, b);
            assert_eq!(ab, ba);
        }
    }
}

#[test]
fn verify_on_four_vertices_finds_only_the_claw() {
    let report = gndb::enumerate::verify_theorems(&gndb::enumerate::VerifyConfig::new(4)).unwrap();
    let perms = permutations(4);
    let claw = brute_canon(&complete_bipartite(1, 3).unwrap(), &perms);
    let three_gndb: Vec<u64> = corpus(4)
        .into_iter()
        .filter(|g| g.n() >= 2 && brute_gndb(g, 3).is_some())
        .map(|g| brute_canon(&g, &perms))
        .collect();
    assert_eq!(three_gndb, vec![claw]);
    let hits = report.matches.iter().filter(|m| m.gamma(3).is_some()).count();
    assert_eq!(hits, 1);
}
