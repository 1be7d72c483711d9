//! Independent reference implementations used as test oracles. Nothing
//! here calls into the crate's distance, partition or canonical-form code.
#![allow(dead_code)]

use gndb::Graph;

/// Floyd-Warshall over the adjacency relation; `None` = unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// `(|W_ab|, |W_ba|, equidistant)` straight from the definition.
pub fn brute_w(d: &[Vec<Option<usize>>], a: usize, b: usize) -> (usize, usize, usize) {
    let (mut ab, mut ba, mut eq) = (0, 0, 0);
    for row in d {
        let (da, db) = (row[a].unwrap(), row[b].unwrap());
        if da < db {
            ab += 1;
        } else if db < da {
            ba += 1;
        } else {
            eq += 1;
        }
    }
    (ab, ba, eq)
}

/// Smallest gamma such that every edge has sides (gamma, k*gamma), if any.
pub fn brute_gndb(g: &Graph, k: usize) -> Option<usize> {
    let d = floyd_warshall(g);
    let mut gamma = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let (ab, ba, _) = brute_w(&d, u, v);
            let (lo, hi) = (ab.min(ba), ab.max(ba));
            if hi != k * lo || gamma.is_some_and(|x| x != lo) {
                return None;
            }
            gamma = Some(lo);
        }
    }
    gamma
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle bits of `g` relabeled by `perm`, in graph6 order.
fn bits_under(g: &Graph, perm: &[usize], inverse: &mut [usize]) -> u64 {
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let mut bits = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(inverse[i], inverse[j]) as u64;
        }
    }
    bits
}

/// Canonical form by trying every permutation (n <= 8).
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let mut inverse = vec![0; g.n()];
    perms.iter().map(|p| bits_under(g, p, &mut inverse)).min().unwrap()
}

/// Explicit search for an isomorphism.
pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && perms.iter().any(|p| {
            (0..a.n()).all(|u| (u + 1..a.n()).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v])))
        })
}

/// Every labeled graph on `n` vertices, as edge bit masks over the pairs
/// in graph6 order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Connectivity by depth-first search over `has_edge`.
pub fn brute_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
