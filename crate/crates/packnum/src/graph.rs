//! Simple undirected graphs on vertices `0..n` with bit-row adjacency,
//! plus all-pairs BFS distances.

use crate::bitset::VertexSet;
use std::fmt;
use thiserror::Error;

/// Distance value for vertex pairs in different components.  Compares
/// greater than every finite distance.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in leaf plan")]
    DuplicatePlanVertex(usize),
}

/// Undirected simple graph.  Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        Self {
            n,
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency row of `v` as a bit set.
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    /// Closed neighborhood `N[v]` as a bit set.
    pub fn closed_row(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertex set of the component containing `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in self.rows[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    frontier.push(v);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut covered = VertexSet::new(self.n);
        for v in 0..self.n {
            if !covered.contains(v) {
                let comp = self.component_of(v);
                covered.union_with(&comp);
                out.push(comp);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Self {
        debug_assert!(self.has_edge(u, v));
        let mut g = self.clone();
        g.rows[u].remove(v);
        g.rows[v].remove(u);
        g
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Self {
        assert!(self.n > 1, "cannot delete the only vertex");
        assert!(v < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Self::empty(self.n - 1);
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on the vertices of `keep`, relabelled in ascending
    /// order of their original indices.
    pub fn induced(&self, keep: &VertexSet) -> Self {
        let verts = keep.to_vec();
        assert!(!verts.is_empty());
        let mut g = Self::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Appends pendant vertices per `plan`, a list of `(vertex, count)`
    /// entries over distinct existing vertices.  New leaves take indices
    /// `n, n+1, ...` in plan order; original indices are preserved.
    pub fn append_leaves(&self, plan: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = VertexSet::new(self.n);
        let mut extra = 0usize;
        for &(v, count) in plan {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicatePlanVertex(v));
            }
            seen.insert(v);
            extra += count;
        }
        let mut g = Self::empty(self.n + extra);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let mut next = self.n;
        for &(v, count) in plan {
            for _ in 0..count {
                g.add_edge(v, next);
                next += 1;
            }
        }
        Ok(g)
    }

    /// True if the graph is a complete graph on `n >= 1` vertices.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// True if the graph is a star `K_{1,m}` with `m >= 1` leaves.
    pub fn is_star(&self) -> bool {
        if self.n < 2 || self.edge_count() != self.n - 1 {
            return false;
        }
        let center_deg = self.n - 1;
        let mut centers = 0;
        let mut leaves = 0;
        for v in 0..self.n {
            match self.degree(v) {
                d if d == center_deg => centers += 1,
                1 => leaves += 1,
                _ => return false,
            }
        }
        // K_2 counts both endpoints as centers.
        centers >= 1 && centers + leaves == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All-pairs distances with an explicit [`UNREACHABLE`] marker.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn is_unreachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) == UNREACHABLE
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.get(v, u)).max().unwrap_or(0)
    }

    /// Largest distance over all pairs; [`UNREACHABLE`] when disconnected.
    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        let mut seen = VertexSet::new(n);
        seen.insert(src);
        let mut frontier = VertexSet::new(n);
        frontier.insert(src);
        let mut dist = 0u32;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = VertexSet::new(n);
            for u in frontier.iter() {
                next.union_with(g.row(u));
            }
            next.subtract(&seen);
            for v in next.iter() {
                row[v] = dist;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::EmptyOrder));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn degrees_and_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(g.is_connected());
    }

    #[test]
    fn distances_on_path() {
        let g = path(5);
        let dm = distances(&g);
        assert_eq!(dm.get(0, 4), 4);
        assert_eq!(dm.get(2, 2), 0);
        assert_eq!(dm.diameter(), 4);
    }

    #[test]
    fn unreachable_is_largest() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = distances(&g);
        assert!(dm.is_unreachable(0, 2));
        assert_eq!(dm.diameter(), UNREACHABLE);
        assert!(dm.get(0, 2) > 1_000_000);
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn delete_vertex_relabels() {
        let g = path(4);
        let h = g.delete_vertex(1);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn append_leaves_plan() {
        let g = path(3);
        let h = g.append_leaves(&[(0, 2), (2, 1)]).unwrap();
        assert_eq!(h.n(), 6);
        assert!(h.has_edge(0, 3) && h.has_edge(0, 4) && h.has_edge(2, 5));
        assert_eq!(
            g.append_leaves(&[(0, 1), (0, 1)]),
            Err(GraphError::DuplicatePlanVertex(0))
        );
    }

    #[test]
    fn complete_and_star_recognition() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_complete());
        assert!(!k4.is_star());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_star());
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(k2.is_complete() && k2.is_star());
        let k1 = Graph::empty(1);
        assert!(k1.is_complete() && !k1.is_star());
        assert!(!path(4).is_star());
    }
}
