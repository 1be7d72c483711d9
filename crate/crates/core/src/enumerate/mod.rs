//! Exhaustive generation of connected graphs up to isomorphism.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose deletion
//! leaves it connected, so each class on `n` vertices arises by joining a
//! new vertex to a nonempty subset of some class on `n - 1` vertices.
//! A child is kept only when generated from its *canonical parent*: the
//! class obtained by deleting the non-cut vertex in the highest canonical
//! position. Each class therefore has exactly one owning parent, and
//! parents can be split into shards whose outputs are disjoint.

mod report;
mod scan;

pub use report::{Certificate, CorpusStats, Match, Predicate, ReportKind, ScanReport, Verdict};
pub use scan::{scan, scan_corpus, verify_theorems, ScanConfig, VerifyConfig, DEFAULT_KS};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, CanonKey, Graph};

pub const MAX_ORDER: usize = 9;

/// Connected unlabeled graphs on `n` vertices, indexed by `n`.
pub const CONNECTED_CLASS_COUNTS: [usize; MAX_ORDER + 1] =
    [0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080];

pub(crate) fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange { n, max: MAX_ORDER })
    }
}

/// One canonical representative per class of connected graphs on `n`
/// vertices, sorted by canonical key.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_upto(n, 1)?.pop().expect("at least one level"))
}

/// Levels `1..=n_max`; `levels[i]` holds the classes on `i + 1` vertices.
pub fn connected_graphs_upto(n_max: usize, jobs: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(n_max)?;
    let mut levels = vec![vec![Graph::new(1)?]];
    while levels.len() < n_max {
        let next = next_level(levels.last().expect("nonempty"), jobs);
        levels.push(next);
    }
    Ok(levels)
}

/// Classes on `n + 1` vertices from the complete list of classes on `n`.
pub fn next_level(parents: &[Graph], jobs: usize) -> Vec<Graph> {
    let jobs = jobs.max(1);
    let mut children: Vec<(CanonKey, Graph)> = if jobs == 1 {
        shard(parents, 0, 1)
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|i| s.spawn(move || shard(parents, i, jobs))).collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration shard panicked"))
                .collect()
        })
    };
    children.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(children.windows(2).all(|w| w[0].0 != w[1].0));
    children.into_iter().map(|(_, g)| g).collect()
}

/// Children owned by parents `index, index + count, ...`. Shards with
/// different indices never share a class.
pub fn shard(parents: &[Graph], index: usize, count: usize) -> Vec<(CanonKey, Graph)> {
    let mut out = Vec::new();
    for parent in parents.iter().skip(index).step_by(count.max(1)) {
        extend_parent(parent, &mut out);
    }
    out
}

fn extend_parent(parent: &Graph, out: &mut Vec<(CanonKey, Graph)>) {
    let m = parent.n();
    let new_vertex = m;
    let parent_key = canonical_labeling(parent).key;
    let mut seen: HashMap<CanonKey, bool> = HashMap::new();
    for mask in 1u64..(1 << m) {
        let child = parent.extend(mask).expect("parent below the vertex cap");
        let canon = canonical_labeling(&child);
        if seen.contains_key(&canon.key) {
            continue;
        }
        let deleted = canon
            .order
            .iter()
            .rev()
            .copied()
            .find(|&v| child.is_non_cut_vertex(v))
            .expect("connected graphs have a non-cut vertex");
        let owned = deleted == new_vertex || {
            let orbits = canon.orbits();
            orbits[deleted] == orbits[new_vertex]
                || canonical_labeling(&child.remove_vertex(deleted).expect("n >= 2")).key == parent_key
        };
        if owned {
            out.push((canon.key.clone(), canon.apply(&child)));
        }
        seen.insert(canon.key, owned);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn small_counts() {
        let levels = connected_graphs_upto(6, 1).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, CONNECTED_CLASS_COUNTS[1..=6]);
    }

    #[test]
    fn range_checked() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(10).is_err());
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let graphs = connected_graphs(5).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            assert!(g.is_connected());
            assert_eq!(&canonical_labeling(g).apply(g), g);
            for h in &graphs[i + 1..] {
                assert!(!are_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn shards_are_disjoint_and_complete() {
        let parents = connected_graphs(5).unwrap();
        let single = next_level(&parents, 1);
        let mut union: Vec<CanonKey> = Vec::new();
        for i in 0..3 {
            union.extend(shard(&parents, i, 3).into_iter().map(|(k, _)| k));
        }
        let total = union.len();
        union.sort();
        union.dedup();
        assert_eq!(union.len(), total);
        assert_eq!(total, single.len());
        assert_eq!(next_level(&parents, 3), single);
    }
}
