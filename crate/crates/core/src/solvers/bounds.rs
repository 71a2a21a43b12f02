//! Colorings that certify lower bounds on `tmc`. Each one is built as a
//! [`TreeCollection`] so the exact search can use it as a starting incumbent.

use super::leaves::max_leaf_spanning_tree;
use super::{SolverError, TreeCollection};
use crate::coloring::{coloring_from_collection, is_tmc, ColorTree, TotalColoring, Verdict};
use crate::families::layout_parts;
use crate::graph::{choose2, members, Edge, Graph, VertexSet};

/// One color on a max-leaf spanning tree and its internal vertices.
pub fn theorem1_collection(g: &Graph) -> Result<TreeCollection, SolverError> {
    let tree = max_leaf_spanning_tree(g)?.tree;
    let trees = if tree.len() >= 2 {
        vec![ColorTree::from_edges(tree)]
    } else {
        vec![]
    };
    Ok(TreeCollection::new(trees))
}

/// Coloring with `m - n + 2 + l(G)` colors.
pub fn lower_bound_theorem1(g: &Graph) -> Result<TotalColoring, SolverError> {
    let trees = theorem1_collection(g)?;
    verified(g, &trees)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementShape {
    Star { center: usize },
    DoubleStar { u: usize, v: usize },
}

/// Star or double-star coloring of a graph missing `p` edges of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementBound {
    pub p: usize,
    /// Vertices of the complement that touch a missing edge.
    pub reduced_order: usize,
    pub shape: ComplementShape,
    pub trees: TreeCollection,
    pub coloring: TotalColoring,
    pub colors: usize,
}

/// Applies to connected graphs with `m = C(n,2) - p`, `1 <= p <= n - 3`.
///
/// Let `R` be the vertices incident to missing edges. When `|R| <= p + 1`
/// some vertex outside `R` is universal and a star from it over `R` joins
/// every missing pair. Otherwise the complement restricted to `R` has at least
/// two components; with `u`, `v` in different ones, `u` takes `v`'s component
/// and `v` takes the rest of `R`. Either tree wastes exactly `|R|` colors.
pub fn complement_bound(g: &Graph) -> Result<ComplementBound, SolverError> {
    let n = g.order();
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let p = choose2(n) - g.size();
    if p < 1 || p + 3 > n {
        return Err(SolverError::NotApplicable(format!(
            "{p} missing edges outside 1..={}",
            n.saturating_sub(3)
        )));
    }
    let comp = g.complement();
    let reduced: VertexSet = (0..n)
        .filter(|&v| comp.degree(v) > 0)
        .fold(0, |acc, v| acc | 1 << v);
    let reduced_order = reduced.count_ones() as usize;
    let (shape, edges) = if reduced_order <= p + 1 {
        let outside = g.vertices() & !reduced;
        if outside == 0 {
            return Err(SolverError::Invalid(
                "no universal vertex outside the missing edges".into(),
            ));
        }
        let center = outside.trailing_zeros() as usize;
        let edges = members(reduced).map(|x| Edge::new(center, x)).collect();
        (ComplementShape::Star { center }, edges)
    } else {
        let u = reduced.trailing_zeros() as usize;
        let cu = comp.reach(u, reduced);
        let rest = reduced & !cu;
        if rest == 0 {
            return Err(SolverError::Invalid(
                "complement core has a single component".into(),
            ));
        }
        let v = rest.trailing_zeros() as usize;
        let cv = comp.reach(v, reduced);
        let mut edges: Vec<Edge> = members(cv).map(|x| Edge::new(u, x)).collect();
        edges.extend(members(reduced & !cv & !(1 << u)).map(|y| Edge::new(v, y)));
        (ComplementShape::DoubleStar { u, v }, edges)
    };
    let trees = TreeCollection::new(vec![ColorTree::from_edges(edges)]);
    let coloring = verified(g, &trees)?;
    let colors = g.size() + n - trees.waste();
    Ok(ComplementBound {
        p,
        reduced_order,
        shape,
        trees,
        coloring,
        colors,
    })
}

pub fn lower_bound_complement(g: &Graph) -> Result<TotalColoring, SolverError> {
    complement_bound(g).map(|b| b.coloring)
}

/// Star trees covering each part of size at least two of a complete
/// multipartite graph with the given vertex classes.
///
/// Part `i` is covered by a star centred at the first vertex of part
/// `i + 1` (cyclically). Two such stars can only share an edge when each
/// centre lies in the other's part, which needs exactly two parts; with two
/// parts both of size at least two a single double star is used instead.
pub(crate) fn multipartite_trees(parts: &[VertexSet]) -> Vec<ColorTree> {
    let r = parts.len();
    let big: Vec<usize> = (0..r).filter(|&i| parts[i].count_ones() >= 2).collect();
    if r == 2 && big.len() == 2 {
        let x = parts[1].trailing_zeros() as usize;
        let y = parts[0].trailing_zeros() as usize;
        let mut edges: Vec<Edge> = members(parts[0]).map(|a| Edge::new(x, a)).collect();
        edges.extend(members(parts[1] & !(1 << x)).map(|b| Edge::new(y, b)));
        return vec![ColorTree::from_edges(edges)];
    }
    big.into_iter()
        .map(|i| {
            let center = parts[(i + 1) % r].trailing_zeros() as usize;
            ColorTree::from_edges(members(parts[i]).map(|a| Edge::new(center, a)).collect())
        })
        .collect()
}

/// The complete multipartite graph on consecutive vertex blocks of the given
/// sizes, with its star collection.
pub fn multipartite_collection(parts: &[usize]) -> Result<(Graph, TreeCollection), SolverError> {
    let (g, blocks) = layout_parts(parts).map_err(|e| SolverError::Invalid(e.to_string()))?;
    Ok((g, TreeCollection::new(multipartite_trees(&blocks))))
}

/// Coloring of `K_{n_1,...,n_r}` with `m + r - t` colors, `t` the number of
/// parts of size at least two.
pub fn multipartite_coloring(parts: &[usize]) -> Result<(Graph, TotalColoring), SolverError> {
    let (g, trees) = multipartite_collection(parts)?;
    let col = verified(&g, &trees)?;
    Ok((g, col))
}

/// `m(G) - m(H) + tmc(H)` for a connected spanning subgraph `H` of `G`.
pub fn lower_bound_subgraph(g: &Graph, h: &Graph, tmc_h: usize) -> Result<usize, SolverError> {
    if h.order() != g.order() {
        return Err(SolverError::Invalid(format!(
            "subgraph order {} differs from {}",
            h.order(),
            g.order()
        )));
    }
    if let Some(e) = h.edges().into_iter().find(|e| !g.has_edge(e.u(), e.v())) {
        return Err(SolverError::Invalid(format!("edge {e} not in host graph")));
    }
    if !h.is_connected() {
        return Err(SolverError::Invalid("subgraph is disconnected".into()));
    }
    Ok(g.size() - h.size() + tmc_h)
}

/// Colors the collection and runs the full TMC check on the result.
pub(crate) fn verified(g: &Graph, trees: &TreeCollection) -> Result<TotalColoring, SolverError> {
    let col = coloring_from_collection(g, trees)?;
    match is_tmc(g, &col)? {
        Verdict::Valid => Ok(col),
        Verdict::Invalid(pair) => Err(SolverError::WitnessRejected(pair)),
    }
}
