//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so vertex sets are plain bitmasks
//! throughout the crate.

mod canon;
mod enumerate;
mod graph6;
mod predicates;

pub use canon::{canonical_form, canonical_key, CANON_MAX_ORDER};
pub use enumerate::{enumerate_connected, ENUM_MAX_ORDER};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use predicates::{predicates, GraphPredicateReport};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub const MAX_ORDER: usize = 64;

/// A set of vertices, bit `v` set iff vertex `v` is a member.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} outside supported range 1..=64")]
    Order(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    Vertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("adjacency not symmetric at {u}-{v}")]
    Asymmetric { u: usize, v: usize },
}

/// An unordered vertex pair stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn mask(self) -> VertexSet {
        bit(self.0) | bit(self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[inline]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Index of the pair `{i, j}` in column-major upper-triangle order
/// (0-1, 0-2, 1-2, 0-3, ...).
#[inline]
pub const fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::Order(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::Vertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if g.has_edge(a, b) {
                return Err(GraphError::DuplicateEdge(Edge::new(a, b)));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, rejecting asymmetric rows and loops.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::Order(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            if row & !full_mask(n) != 0 {
                let w = (row & !full_mask(n)).trailing_zeros() as usize;
                return Err(GraphError::Vertex { vertex: w, n });
            }
            for w in members(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric { u: v, v: w });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_mask(u + 1)) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    /// Vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let rest = full_mask(self.n) & !full_mask(u + 1) & !self.adj[u];
            out.extend(members(rest).map(|v| Edge(u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.size() == choose2(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is not).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        if set == 0 {
            return false;
        }
        self.reach(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for e in self.edges() {
            out.add_edge(perm[e.0], perm[e.1]);
        }
        out
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set).collect();
        let mut out = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c5 = cycle(5);
        assert_eq!(
            canonical_form(&c5.complement()).unwrap(),
            canonical_form(&c5).unwrap()
        );
    }

    #[test]
    fn connectivity_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p3.is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let mut cocktail = Graph::complete(6).unwrap();
        for i in 0..3 {
            cocktail.remove_edge(2 * i, 2 * i + 1);
        }
        assert!(cocktail.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::empty(0), Err(GraphError::Order(0)));
        assert_eq!(Graph::empty(65), Err(GraphError::Order(65)));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::Vertex { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge::new(0, 1)))
        );
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn order_64_fits() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.size(), choose2(64));
        assert!(g.is_connected());
        assert_eq!(g.complement().size(), 0);
    }

    #[test]
    fn pair_index_is_column_major() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(3, 0), 3);
        assert_eq!(pair_index(6, 7), 27);
    }

    #[test]
    fn induced_relabels_in_order() {
        let c5 = cycle(5);
        let p = c5.induced(0b10011);
        assert_eq!(p.order(), 3);
        assert_eq!(p.edges(), vec![Edge::new(0, 1), Edge::new(0, 2)]);
    }
}
