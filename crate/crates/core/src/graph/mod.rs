//! Simple undirected graphs on at most 64 vertices.
//!
//! Neighbor sets are stored as one `u64` bit mask per vertex, so most
//! set operations (BFS frontiers, partition refinement) are word-level.

mod canon;
mod distance;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonKey, Canonical};
pub use distance::{bfs_distances, DistanceMatrix};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bit mask. Panics if `v` is out of range.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<Bits> {
        self.check_vertex(v)?;
        Ok(Bits(self.adj[v]))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `src`, as a mask.
    pub(crate) fn component_mask(&self, src: usize) -> u64 {
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == self.vertex_mask()
    }

    /// Proper 2-coloring, or an edge whose endpoints land on the same BFS
    /// layer parity (the witness of an odd cycle).
    pub fn two_coloring(&self) -> std::result::Result<Vec<u8>, (usize, usize)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for u in Bits(self.adj[v]) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return Err((v.min(u), v.max(u)));
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    /// All-pairs hop distances.
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    pub fn diameter(&self) -> Result<usize> {
        self.distances().diameter()
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut mapped = 0u64;
            for u in Bits(row) {
                mapped |= 1 << perm[u];
            }
            adj[perm[v]] = mapped;
        }
        Graph { n: self.n, adj }
    }

    /// Copy with vertex `v` deleted; higher ids shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::VertexCount(0));
        }
        let low = full_mask(v);
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| squeeze(row))
            .collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Copy with a new vertex `n` joined to every vertex in `mask`.
    pub fn extend(&self, mask: u64) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::VertexCount(self.n + 1));
        }
        if mask & !self.vertex_mask() != 0 {
            let vertex = (mask & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for u in Bits(mask) {
            adj[u] |= 1 << new;
        }
        adj.push(mask);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Whether deleting `v` leaves the rest connected.
    pub(crate) fn is_non_cut_vertex(&self, v: usize) -> bool {
        if self.n <= 2 {
            return true;
        }
        let rest = self.vertex_mask() & !(1 << v);
        let start = rest.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & rest & !seen;
            seen |= frontier;
        }
        seen == rest
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(Graph::new(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::new(65), Err(Error::VertexCount(65)));
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn sixty_four_vertices_fit() {
        let g = families::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.degree(63).unwrap(), 63);
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(families::cycle(5).unwrap().is_connected());
        assert!(!Graph::new(2).unwrap().is_connected());
        assert!(families::complete_bipartite(2, 6).unwrap().is_connected());
        assert!(Graph::new(1).unwrap().is_connected());
    }

    #[test]
    fn bipartiteness() {
        assert!(families::cycle(6).unwrap().is_bipartite());
        let c5 = families::cycle(5).unwrap();
        let (u, v) = c5.two_coloring().unwrap_err();
        assert!(c5.has_edge(u, v));
        let k26 = families::complete_bipartite(2, 6).unwrap();
        let colors = k26.two_coloring().unwrap();
        let ones = colors.iter().filter(|&&c| c == 1).count();
        let mut sizes = [ones, colors.len() - ones];
        sizes.sort();
        assert_eq!(sizes, [2, 6]);
        for (u, v) in k26.edges() {
            assert_ne!(colors[u], colors[v]);
        }
    }

    #[test]
    fn degrees() {
        let star = families::complete_bipartite(1, 3).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(star.degree(2).unwrap(), 1);
        let c7 = families::cycle(7).unwrap();
        assert!((0..7).all(|v| c7.degree(v).unwrap() == 2));
        assert!(c7.degree(7).is_err());
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(families::complete(n).unwrap().diameter().unwrap(), 1);
        }
        assert_eq!(families::complete_bipartite(2, 6).unwrap().diameter().unwrap(), 2);
        assert_eq!(families::path(4).unwrap().diameter().unwrap(), 3);
        assert_eq!(Graph::new(3).unwrap().diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn vertex_surgery() {
        let p4 = families::path(4).unwrap();
        let p3 = p4.remove_vertex(3).unwrap();
        assert_eq!(p3, families::path(3).unwrap());
        let split = p4.remove_vertex(1).unwrap();
        assert_eq!(split.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(p4.is_non_cut_vertex(0));
        assert!(!p4.is_non_cut_vertex(1));
        let back = p3.extend(1 << 2).unwrap();
        assert_eq!(back, p4);
    }

    #[test]
    fn relabel_preserves_edges() {
        let p3 = families::path(3).unwrap();
        let r = p3.relabel(&[1, 0, 2]);
        assert_eq!(r.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }
}
