//! Canonical labeling by individualization and refinement.
//!
//! The search tree is rooted at the coarsest equitable partition. Every
//! internal node individualizes one vertex of its first non-singleton cell
//! and refines again; every leaf is a discrete partition, i.e. a candidate
//! labeling. The canonical labeling is the leaf whose relabeled adjacency
//! bit string (graph6 bit order) is lexicographically smallest.
//!
//! Subtrees are skipped when an automorphism already discovered (two leaves
//! with identical relabeled graphs) fixes the current prefix pointwise and
//! maps the candidate vertex onto one that was already explored.

use super::{Bits, Graph};
use crate::codec::graph6;

/// Comparison key of a relabeled graph. Word `j` holds the adjacency of
/// position `j` to positions `0..j`, position 0 in the most significant
/// bit, so ordering keys orders graph6 bit strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonKey(Vec<u64>);

impl CanonKey {
    /// Key of `g` under its current labeling.
    pub fn of(g: &Graph) -> Self {
        let order: Vec<usize> = (0..g.n()).collect();
        let mut key = vec![0; g.n()];
        fill_key(g, &order, &mut key);
        CanonKey(key)
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// `order[p]` is the vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    pub key: CanonKey,
    generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// The canonically relabeled copy of `g`.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.relabel(&self.labeling)
    }

    /// Non-identity automorphisms discovered during the search.
    /// They are automorphisms of the input (vertex `v` maps to `a[v]`).
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Orbit representative (smallest vertex id) for every vertex under the
    /// group generated by the discovered automorphisms.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.labeling.len();
        let mut uf = UnionFind::new(n);
        for a in &self.generators {
            for (v, &w) in a.iter().enumerate() {
                uf.union(v, w);
            }
        }
        let mut rep = vec![usize::MAX; n];
        for v in 0..n {
            let r = uf.find(v);
            if rep[r] == usize::MAX {
                rep[r] = v;
            }
        }
        (0..n).map(|v| rep[uf.find(v)]).collect()
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.n();
    let mut search = Search {
        g,
        first: None,
        best_key: vec![0; n],
        best_order: Vec::new(),
        autos: Vec::new(),
        leaf_order: vec![0; n],
        leaf_key: vec![0; n],
    };
    let mut prefix = Vec::with_capacity(n);
    search.descend(vec![g.vertex_mask()], &mut prefix);
    let order = search.best_order;
    let mut labeling = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        labeling[v] = p;
    }
    Canonical {
        labeling,
        order,
        key: CanonKey(search.best_key),
        generators: search.autos,
    }
}

/// graph6 bytes of the canonically relabeled graph. Equal outputs exactly
/// for isomorphic inputs.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let canon = canonical_labeling(g);
    graph6::encode(&canon.apply(g)).into_bytes()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_labeling(a).key == canonical_labeling(b).key
}

fn fill_key(g: &Graph, order: &[usize], key: &mut [u64]) {
    for (j, &vj) in order.iter().enumerate() {
        let row = g.neighbor_mask(vj);
        let mut word = 0u64;
        for (i, &vi) in order[..j].iter().enumerate() {
            if row >> vi & 1 == 1 {
                word |= 1 << (63 - i);
            }
        }
        key[j] = word;
    }
}

/// Refines an ordered partition to the coarsest equitable partition below
/// it. Split pieces replace their cell in place, ordered by neighbor count
/// into the splitting cell, so the result is labeling-invariant.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut split = false;
        let mut c = 0;
        while c < cells.len() {
            let cell = cells[c];
            if cell & (cell - 1) == 0 {
                c += 1;
                continue;
            }
            let mut buckets = [0u64; 65];
            let (mut lo, mut hi) = (usize::MAX, 0);
            for v in Bits(cell) {
                let k = (g.neighbor_mask(v) & splitter).count_ones() as usize;
                buckets[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                c += 1;
                continue;
            }
            let pieces: Vec<u64> = buckets[lo..=hi].iter().copied().filter(|&m| m != 0).collect();
            let len = pieces.len();
            cells.splice(c..=c, pieces);
            c += len;
            split = true;
        }
        s = if split { 0 } else { s + 1 };
    }
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best_key: Vec<u64>,
    best_order: Vec<usize>,
    autos: Vec<Vec<usize>>,
    leaf_order: Vec<usize>,
    leaf_key: Vec<u64>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|&c| c & (c - 1) != 0) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.g.n());
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        for (p, &c) in cells.iter().enumerate() {
            self.leaf_order[p] = c.trailing_zeros() as usize;
        }
        fill_key(self.g, &self.leaf_order, &mut self.leaf_key);
        let Some((first_key, first_order)) = &self.first else {
            self.first = Some((self.leaf_key.clone(), self.leaf_order.clone()));
            self.best_key.copy_from_slice(&self.leaf_key);
            self.best_order = self.leaf_order.clone();
            return;
        };
        let reference = if &self.leaf_key == first_key {
            Some(first_order)
        } else if self.leaf_key == self.best_key {
            Some(&self.best_order)
        } else {
            None
        };
        match reference {
            Some(reference) => {
                let mut auto = vec![0; self.g.n()];
                for (p, &v) in reference.iter().enumerate() {
                    auto[v] = self.leaf_order[p];
                }
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(auto);
                }
            }
            None => {
                if self.leaf_key < self.best_key {
                    self.best_key.copy_from_slice(&self.leaf_key);
                    self.best_order.copy_from_slice(&self.leaf_order);
                }
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
