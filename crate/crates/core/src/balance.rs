//! Distance-balance partitions and classification.
//!
//! For an edge `ab`, `W_ab` is the set of vertices strictly closer to `a`
//! than to `b`. A graph is k-GDB when on every edge the larger of `|W_ab|`,
//! `|W_ba|` is exactly `k` times the smaller, and k-GNDB when in addition
//! the smaller side has the same size `gamma` on every edge. `k = 1` gives
//! the distance-balanced (DB) and nicely distance-balanced (NDB) classes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Partition of the vertex set induced by one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBalance {
    pub a: usize,
    pub b: usize,
    pub w_ab: usize,
    pub w_ba: usize,
    pub eq_count: usize,
    /// `(i, j) -> |{x : d(x,a) = i, d(x,b) = j}|`, realized pairs only.
    pub d_table: BTreeMap<(usize, usize), usize>,
}

impl EdgeBalance {
    pub fn d(&self, i: usize, j: usize) -> usize {
        self.d_table.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn smaller(&self) -> usize {
        self.w_ab.min(self.w_ba)
    }

    pub fn larger(&self) -> usize {
        self.w_ab.max(self.w_ba)
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

pub fn edge_partition(g: &Graph, dm: &DistanceMatrix, a: usize, b: usize) -> Result<EdgeBalance> {
    for v in [a, b] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge { a, b });
    }
    assert_eq!(dm.n(), g.n(), "distance matrix belongs to another graph");
    let mut eb = EdgeBalance {
        a,
        b,
        w_ab: 0,
        w_ba: 0,
        eq_count: 0,
        d_table: BTreeMap::new(),
    };
    for x in 0..g.n() {
        let (Some(da), Some(db)) = (dm.get(x, a), dm.get(x, b)) else {
            return Err(Error::Disconnected);
        };
        match da.cmp(&db) {
            std::cmp::Ordering::Less => eb.w_ab += 1,
            std::cmp::Ordering::Greater => eb.w_ba += 1,
            std::cmp::Ordering::Equal => eb.eq_count += 1,
        }
        *eb.d_table.entry((da, db)).or_insert(0) += 1;
    }
    Ok(eb)
}

/// The D-table form of the ratio condition: with the larger side first,
/// `sum_{i>=1} |D^i_{i+1}| = k * sum_{i>=1} |D^{i+1}_i| + (k - 1)`.
/// Uses only the D-table, never the W counts.
pub fn check_sum_identity(eb: &EdgeBalance, k: u32) -> bool {
    let k = k as usize;
    let mut toward_a = 0;
    let mut toward_b = 0;
    for (&(i, j), &count) in &eb.d_table {
        if i >= 1 && j == i + 1 {
            toward_a += count;
        } else if j >= 1 && i == j + 1 {
            toward_b += count;
        }
    }
    let (big, small) = (toward_a.max(toward_b), toward_a.min(toward_b));
    big == k * small + (k - 1)
}

/// `max(|W_ab|, |W_ba|) = k * min(|W_ab|, |W_ba|)`, orientation-free.
pub fn is_consistent_edge(eb: &EdgeBalance, k: u32) -> bool {
    eb.larger() == k as usize * eb.smaller()
}

/// Whole-graph verdict with per-edge evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceClass {
    pub n: usize,
    pub is_db: bool,
    pub ndb_gamma: Option<usize>,
    pub kgdb: BTreeMap<u32, bool>,
    pub kgndb: BTreeMap<u32, Option<usize>>,
    pub per_edge: Vec<EdgeBalance>,
}

impl BalanceClass {
    pub fn is_kgdb(&self, k: u32) -> bool {
        self.kgdb.get(&k).copied().unwrap_or(false)
    }

    pub fn gamma(&self, k: u32) -> Option<usize> {
        self.kgndb.get(&k).copied().flatten()
    }
}

fn gndb_gamma(per_edge: &[EdgeBalance], k: u32) -> (bool, Option<usize>) {
    if per_edge.is_empty() {
        return (false, None);
    }
    let gdb = per_edge.iter().all(|eb| is_consistent_edge(eb, k));
    let gamma = per_edge[0].smaller();
    let nice = gdb && per_edge.iter().all(|eb| eb.smaller() == gamma);
    (gdb, nice.then_some(gamma))
}

/// Classifies a connected graph for each requested `k`. A single vertex has
/// no edges and is in none of the classes.
pub fn classify(g: &Graph, ks: &[u32]) -> Result<BalanceClass> {
    for &k in ks {
        check_k(k)?;
    }
    let dm = g.distances();
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    classify_with(g, &dm, ks)
}

pub(crate) fn classify_with(g: &Graph, dm: &DistanceMatrix, ks: &[u32]) -> Result<BalanceClass> {
    let per_edge = g
        .edges()
        .map(|(a, b)| edge_partition(g, dm, a, b))
        .collect::<Result<Vec<_>>>()?;
    let (is_db, ndb_gamma) = gndb_gamma(&per_edge, 1);
    let mut kgdb = BTreeMap::new();
    let mut kgndb = BTreeMap::new();
    for &k in ks {
        let (gdb, gamma) = gndb_gamma(&per_edge, k);
        kgdb.insert(k, gdb);
        kgndb.insert(k, gamma);
    }
    Ok(BalanceClass {
        n: g.n(),
        is_db,
        ndb_gamma,
        kgdb,
        kgndb,
        per_edge,
    })
}

fn inapplicable(why: &str) -> Error {
    Error::Inapplicable(why.to_string())
}

/// On a diameter-2 k-GNDB graph: every edge has `deg` ratio exactly `k`,
/// with the higher-degree endpoint on the larger W side.
pub fn degree_ratio_holds(g: &Graph, k: u32) -> Result<bool> {
    check_k(k)?;
    let dm = g.distances();
    match dm.diameter() {
        Err(_) => return Err(inapplicable("graph is disconnected")),
        Ok(2) => {}
        Ok(_) => return Err(inapplicable("diameter is not 2")),
    }
    let class = classify_with(g, &dm, &[k])?;
    if class.gamma(k).is_none() {
        return Err(inapplicable("graph is not k-GNDB"));
    }
    let degrees = g.degrees();
    let k = k as usize;
    Ok(class.per_edge.iter().all(|eb| {
        let (big, small) = if eb.w_ab >= eb.w_ba { (eb.a, eb.b) } else { (eb.b, eb.a) };
        degrees[big] == k * degrees[small]
    }))
}

pub fn diameter_bound_holds(d: usize, k: u32, gamma: usize) -> bool {
    d <= k as usize * gamma
}

/// A bipartite k-GNDB graph with constant `gamma` has `(k + 1) * gamma`
/// vertices, because no vertex is equidistant from the ends of an edge.
pub fn order_equals_expected(g: &Graph, k: u32, gamma: usize) -> Result<bool> {
    check_k(k)?;
    if !g.is_bipartite() {
        return Err(inapplicable("graph is not bipartite"));
    }
    let class = classify(g, &[k]).map_err(|_| inapplicable("graph is disconnected"))?;
    if class.gamma(k) != Some(gamma) {
        return Err(inapplicable("graph is not k-GNDB with the given gamma"));
    }
    Ok(g.n() == (k as usize + 1) * gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, star};

    fn partition(g: &Graph, a: usize, b: usize) -> EdgeBalance {
        edge_partition(g, &g.distances(), a, b).unwrap()
    }

    #[test]
    fn star_center_edge() {
        let eb = partition(&star(3).unwrap(), 0, 1);
        assert_eq!((eb.w_ab, eb.w_ba, eb.eq_count), (3, 1, 0));
        assert_eq!(eb.d(0, 1), 1);
        assert_eq!(eb.d(1, 0), 1);
        assert_eq!(eb.d(1, 2), 2);
        assert!(check_sum_identity(&eb, 3));
        assert!(is_consistent_edge(&eb, 3));
    }

    #[test]
    fn k26_edge() {
        let g = complete_bipartite(2, 6).unwrap();
        // vertex 7 on the 6-side, vertex 0 on the 2-side
        let eb = partition(&g, 7, 0);
        assert_eq!((eb.w_ab, eb.w_ba, eb.eq_count), (2, 6, 0));
        assert_eq!(eb.d(2, 1), 5);
        assert_eq!(eb.d(1, 2), 1);
        assert!(check_sum_identity(&eb, 3));
    }

    #[test]
    fn c5_has_equidistant_vertex() {
        let eb = partition(&cycle(5).unwrap(), 0, 1);
        assert_eq!((eb.w_ab, eb.w_ba, eb.eq_count), (2, 2, 1));
        assert_eq!(eb.d(2, 2), 1);
    }

    #[test]
    fn c4_is_not_3_gdb() {
        let eb = partition(&cycle(4).unwrap(), 0, 1);
        assert!(!check_sum_identity(&eb, 3));
        assert!(check_sum_identity(&eb, 1));
    }

    #[test]
    fn partition_errors() {
        let p = path(3).unwrap();
        assert_eq!(
            edge_partition(&p, &p.distances(), 0, 2),
            Err(Error::NotAnEdge { a: 0, b: 2 })
        );
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            edge_partition(&split, &split.distances(), 0, 1),
            Err(Error::Disconnected)
        );
        assert_eq!(classify(&split, &[1]), Err(Error::Disconnected));
        assert_eq!(classify(&p, &[0]), Err(Error::InvalidK(0)));
    }

    #[test]
    fn consistency_is_orientation_free() {
        let mk = |w_ab, w_ba| EdgeBalance {
            a: 0,
            b: 1,
            w_ab,
            w_ba,
            eq_count: 0,
            d_table: BTreeMap::new(),
        };
        assert!(is_consistent_edge(&mk(6, 2), 3));
        assert!(is_consistent_edge(&mk(2, 6), 3));
        assert!(!is_consistent_edge(&mk(3, 3), 3));
        assert!(is_consistent_edge(&mk(3, 3), 1));
    }

    #[test]
    fn classifications() {
        let c = classify(&complete_bipartite(2, 6).unwrap(), &[3]).unwrap();
        assert!(c.is_kgdb(3));
        assert_eq!(c.gamma(3), Some(2));

        let c = classify(&cycle(6).unwrap(), &[1, 3]).unwrap();
        assert!(c.is_db);
        assert_eq!(c.ndb_gamma, Some(3));
        assert!(!c.is_kgdb(3));
        assert_eq!(c.kgdb[&1], c.is_db);
        assert_eq!(c.kgndb[&1], c.ndb_gamma);

        let c = classify(&complete_bipartite(3, 9).unwrap(), &[3]).unwrap();
        assert_eq!(c.gamma(3), Some(3));

        let c = classify(&Graph::new(1).unwrap(), &[1, 3]).unwrap();
        assert!(!c.is_db && c.ndb_gamma.is_none() && !c.is_kgdb(3));
        assert!(c.per_edge.is_empty());
    }

    #[test]
    fn degree_ratio() {
        assert_eq!(degree_ratio_holds(&complete_bipartite(2, 6).unwrap(), 3), Ok(true));
        assert_eq!(degree_ratio_holds(&star(3).unwrap(), 3), Ok(true));
        assert_eq!(degree_ratio_holds(&complete_bipartite(4, 12).unwrap(), 3), Ok(true));
        assert!(matches!(degree_ratio_holds(&path(4).unwrap(), 3), Err(Error::Inapplicable(_))));
        assert!(matches!(degree_ratio_holds(&cycle(4).unwrap(), 3), Err(Error::Inapplicable(_))));
        assert!(matches!(
            degree_ratio_holds(&Graph::new(3).unwrap(), 3),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn diameter_bound() {
        assert!(diameter_bound_holds(2, 3, 2));
        assert!(diameter_bound_holds(2, 3, 1));
        assert!(!diameter_bound_holds(7, 3, 2));
    }

    #[test]
    fn order() {
        assert_eq!(order_equals_expected(&complete_bipartite(2, 6).unwrap(), 3, 2), Ok(true));
        assert_eq!(order_equals_expected(&star(3).unwrap(), 3, 1), Ok(true));
        assert_eq!(order_equals_expected(&complete_bipartite(3, 9).unwrap(), 3, 3), Ok(true));
        assert!(order_equals_expected(&complete(3).unwrap(), 1, 1).is_err());
        assert!(order_equals_expected(&star(3).unwrap(), 3, 2).is_err());
    }
}
