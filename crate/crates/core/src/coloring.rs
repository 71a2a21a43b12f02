//! Total colorings and the total-monochromatic-connection check.
//!
//! [`is_tmc`] judges a coloring directly by the path definition, so it is the
//! reference every solver and constructor in the crate is checked against.

use crate::graph::{bit, members, Edge, Graph, VertexSet};
use crate::solvers::TreeCollection;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} vertex colors but the graph has order {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("edge {0} is colored but absent from the graph")]
    ForeignEdge(Edge),
    #[error("graph edge {0} has no color")]
    MissingEdge(Edge),
    #[error("edge list and edge color list differ in length ({edges} vs {colors})")]
    Misaligned { edges: usize, colors: usize },
    #[error("invalid edge [{0}, {1}]")]
    BadEdge(usize, usize),
    #[error("edge {0} listed twice")]
    DuplicateEdge(Edge),
    #[error("graph is disconnected")]
    Disconnected,
}

/// One color per edge and one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColoring {
    edge_colors: BTreeMap<Edge, Color>,
    vertex_colors: Vec<Color>,
}

impl TotalColoring {
    pub fn new(edge_colors: BTreeMap<Edge, Color>, vertex_colors: Vec<Color>) -> Self {
        TotalColoring {
            edge_colors,
            vertex_colors,
        }
    }

    /// Every edge and vertex gets its own color: `m + n` colors.
    pub fn all_distinct(g: &Graph) -> Self {
        let edge_colors: BTreeMap<Edge, Color> = g.edges().into_iter().zip(0..).collect();
        let m = edge_colors.len() as Color;
        let vertex_colors = (0..g.order() as Color).map(|v| m + v).collect();
        TotalColoring {
            edge_colors,
            vertex_colors,
        }
    }

    pub fn edge_color(&self, e: Edge) -> Option<Color> {
        self.edge_colors.get(&e).copied()
    }

    pub fn vertex_color(&self, v: usize) -> Option<Color> {
        self.vertex_colors.get(v).copied()
    }

    pub fn edge_colors(&self) -> &BTreeMap<Edge, Color> {
        &self.edge_colors
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn set_edge_color(&mut self, e: Edge, c: Color) {
        self.edge_colors.insert(e, c);
    }

    pub fn set_vertex_color(&mut self, v: usize, c: Color) {
        self.vertex_colors[v] = c;
    }

    /// Smallest id not used anywhere in the coloring.
    pub fn fresh_color(&self) -> Color {
        self.edge_colors
            .values()
            .chain(&self.vertex_colors)
            .max()
            .map_or(0, |c| c + 1)
    }

    /// Checks that exactly the edges and vertices of `g` are colored.
    pub fn check_domain(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.vertex_colors.len() != g.order() {
            return Err(ColoringError::VertexCount {
                expected: g.order(),
                found: self.vertex_colors.len(),
            });
        }
        for &e in self.edge_colors.keys() {
            if e.v() >= g.order() || !g.has_edge(e.u(), e.v()) {
                return Err(ColoringError::ForeignEdge(e));
            }
        }
        for e in g.edges() {
            if !self.edge_colors.contains_key(&e) {
                return Err(ColoringError::MissingEdge(e));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> ColoringFile {
        ColoringFile {
            n: self.vertex_colors.len(),
            edges: self.edge_colors.keys().map(|e| [e.u(), e.v()]).collect(),
            edge_colors: self.edge_colors.values().copied().collect(),
            vertex_colors: self.vertex_colors.clone(),
        }
    }
}

/// Serialized coloring: edges as `[u, v]` with `u < v` in lexicographic
/// order, `edge_colors` aligned with `edges`, `vertex_colors` indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub edge_colors: Vec<Color>,
    pub vertex_colors: Vec<Color>,
}

impl ColoringFile {
    pub fn into_coloring(self) -> Result<TotalColoring, ColoringError> {
        if self.edges.len() != self.edge_colors.len() {
            return Err(ColoringError::Misaligned {
                edges: self.edges.len(),
                colors: self.edge_colors.len(),
            });
        }
        if self.vertex_colors.len() != self.n {
            return Err(ColoringError::VertexCount {
                expected: self.n,
                found: self.vertex_colors.len(),
            });
        }
        let mut edge_colors = BTreeMap::new();
        for ([a, b], c) in self.edges.into_iter().zip(self.edge_colors) {
            if a == b || a >= self.n || b >= self.n {
                return Err(ColoringError::BadEdge(a, b));
            }
            if edge_colors.insert(Edge::new(a, b), c).is_some() {
                return Err(ColoringError::DuplicateEdge(Edge::new(a, b)));
            }
        }
        Ok(TotalColoring {
            edge_colors,
            vertex_colors: self.vertex_colors,
        })
    }
}

/// Edges and vertices carrying one color.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorClass {
    pub edges: Vec<Edge>,
    pub vertices: VertexSet,
}

/// Partitions the colored elements of `g` by color.
pub fn color_subgraphs(
    g: &Graph,
    col: &TotalColoring,
) -> Result<BTreeMap<Color, ColorClass>, ColoringError> {
    col.check_domain(g)?;
    let mut classes: BTreeMap<Color, ColorClass> = BTreeMap::new();
    for (&e, &c) in &col.edge_colors {
        classes.entry(c).or_default().edges.push(e);
    }
    for (v, &c) in col.vertex_colors.iter().enumerate() {
        classes.entry(c).or_default().vertices |= bit(v);
    }
    Ok(classes)
}

pub fn count_colors(col: &TotalColoring) -> usize {
    col.edge_colors
        .values()
        .chain(&col.vertex_colors)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Colors forfeited relative to the all-distinct coloring: `m + n - colors`.
pub fn waste(g: &Graph, col: &TotalColoring) -> Result<usize, ColoringError> {
    col.check_domain(g)?;
    Ok(g.size() + g.order() - count_colors(col))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Lexicographically first vertex pair with no total monochromatic path.
    Invalid(Edge),
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

/// Whether every vertex pair is joined by a path whose edges and internal
/// vertices all share one color.
///
/// Adjacent pairs always pass. For a nonadjacent pair `u, v` and each color
/// `c` on an edge at `u`, the search leaves `u` along `c`-edges and may only
/// pass through vertices colored `c`.
pub fn is_tmc(g: &Graph, col: &TotalColoring) -> Result<Verdict, ColoringError> {
    col.check_domain(g)?;
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    let n = g.order();
    let palette: Vec<Color> = col
        .edge_colors
        .values()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // by_color[c][w] = neighbors of w along edges of palette color c
    let mut by_color = vec![vec![0 as VertexSet; n]; palette.len()];
    for (&e, c) in &col.edge_colors {
        let ci = palette
            .binary_search(c)
            .expect("palette holds every edge color");
        by_color[ci][e.u()] |= bit(e.v());
        by_color[ci][e.v()] |= bit(e.u());
    }
    let colored_as: Vec<VertexSet> = palette
        .iter()
        .map(|c| {
            col.vertex_colors
                .iter()
                .enumerate()
                .filter(|(_, vc)| *vc == c)
                .fold(0, |acc, (v, _)| acc | bit(v))
        })
        .collect();

    for e in g.non_edges() {
        let (u, v) = (e.u(), e.v());
        let joined = (0..palette.len()).any(|ci| {
            let nbrs = &by_color[ci];
            let through = colored_as[ci];
            let mut frontier = nbrs[u] & through;
            let mut seen = bit(u) | frontier;
            while frontier != 0 {
                let mut next = 0;
                for w in members(frontier) {
                    next |= nbrs[w];
                }
                if next & bit(v) != 0 {
                    return true;
                }
                next &= through & !seen;
                seen |= next;
                frontier = next;
            }
            false
        });
        if !joined {
            return Ok(Verdict::Invalid(e));
        }
    }
    Ok(Verdict::Valid)
}

/// A tree carrying one nontrivial color: its edges and internal vertices
/// share the color, its leaves may be colored freely.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorTree {
    edges: Vec<Edge>,
    vertices: VertexSet,
    internal: VertexSet,
}

impl ColorTree {
    /// Builds the tree from its edge list. Whether the edges really form a
    /// tree is checked by [`ColorTree::is_tree`].
    pub fn from_edges(mut edges: Vec<Edge>) -> Self {
        edges.sort();
        let mut vertices = 0;
        let mut seen_once = 0;
        let mut seen_twice = 0;
        for e in &edges {
            for x in [e.u(), e.v()] {
                vertices |= bit(x);
                seen_twice |= seen_once & bit(x);
                seen_once |= bit(x);
            }
        }
        ColorTree {
            edges,
            vertices,
            internal: seen_twice,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn internal(&self) -> VertexSet {
        self.internal
    }

    pub fn leaves(&self) -> VertexSet {
        self.vertices & !self.internal
    }

    pub fn order(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn is_nontrivial(&self) -> bool {
        self.edges.len() >= 2
    }

    /// Connected and acyclic on its own vertex set.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.order() {
            return false;
        }
        let start = self.vertices.trailing_zeros() as usize;
        let mut seen = bit(start);
        loop {
            let grown = self
                .edges
                .iter()
                .filter(|e| seen & e.mask() != 0)
                .fold(seen, |acc, e| acc | e.mask());
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == self.vertices
    }

    /// `|E| - 1 + |internal|` for nontrivial trees, zero otherwise.
    pub fn waste(&self) -> usize {
        if self.is_nontrivial() {
            self.edges.len() - 1 + self.internal.count_ones() as usize
        } else {
            0
        }
    }
}

/// Gives each tree's edges and internal vertices one color and every other
/// element its own color. Colors `0..k` go to the `k` trees in order.
pub fn coloring_from_collection(
    g: &Graph,
    trees: &TreeCollection,
) -> Result<TotalColoring, crate::solvers::Infeasible> {
    trees.check(g, false)?;
    let mut edge_colors = BTreeMap::new();
    let mut vertex_colors: Vec<Option<Color>> = vec![None; g.order()];
    for (i, t) in trees.trees().iter().enumerate() {
        for &e in t.edges() {
            edge_colors.insert(e, i as Color);
        }
        for v in members(t.internal()) {
            vertex_colors[v] = Some(i as Color);
        }
    }
    let mut next = trees.len() as Color;
    for e in g.edges() {
        edge_colors.entry(e).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    let vertex_colors = vertex_colors
        .into_iter()
        .map(|c| {
            c.unwrap_or_else(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    let col = TotalColoring {
        edge_colors,
        vertex_colors,
    };
    debug_assert!(is_tmc(g, &col).is_ok_and(Verdict::is_valid));
    Ok(col)
}
