use super::{Bits, Graph};
use crate::error::{Error, Result};

/// Hop distances from `src` to every vertex; `None` marks unreachable.
pub fn bfs_distances(g: &Graph, src: usize) -> Result<Vec<Option<usize>>> {
    if src >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: src, n: g.n() });
    }
    Ok(bfs_row(g, src))
}

fn bfs_row(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut row = vec![None; g.n()];
    row[src] = Some(0);
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    let mut depth = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0;
        for v in Bits(frontier) {
            next |= g.neighbor_mask(v);
        }
        frontier = next & !seen;
        seen |= frontier;
        for v in Bits(frontier) {
            row[v] = Some(depth);
        }
    }
    row
}

/// All-pairs hop distances of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for src in 0..n {
            dist.extend(bfs_row(g, src));
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, `None` if they lie in different
    /// components. Panics on out-of-range ids.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<usize>] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize> {
        self.dist
            .iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .ok_or(Error::Disconnected)
    }
}
