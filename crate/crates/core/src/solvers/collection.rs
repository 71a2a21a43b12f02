use crate::coloring::ColorTree;
use crate::graph::{choose2, Edge, Graph};
use std::collections::BTreeMap;
use thiserror::Error;

/// Why a set of color trees cannot be realized as a TMC-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Infeasible {
    #[error("tree {0} has fewer than two edges")]
    Trivial(usize),
    #[error("tree {tree} uses edge {edge} which is not in the graph")]
    ForeignEdge { tree: usize, edge: Edge },
    #[error("tree {0} is not a tree on its own vertex set")]
    NotATree(usize),
    #[error("trees {a} and {b} share edge {edge}")]
    SharedEdge { a: usize, b: usize, edge: Edge },
    #[error("trees {a} and {b} share internal vertex {vertex}")]
    SharedInternal { a: usize, b: usize, vertex: usize },
    #[error("trees {a} and {b} share more than one vertex")]
    NotSimple { a: usize, b: usize },
    #[error("nonadjacent pair {0} lies in no tree")]
    Uncovered(Edge),
}

/// Nontrivial color trees encoding a candidate TMC-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeCollection {
    trees: Vec<ColorTree>,
}

impl TreeCollection {
    pub fn new(trees: Vec<ColorTree>) -> Self {
        TreeCollection { trees }
    }

    pub fn trees(&self) -> &[ColorTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Total colors forfeited by the trees.
    pub fn waste(&self) -> usize {
        self.trees.iter().map(ColorTree::waste).sum()
    }

    /// `Σ C(|V(T)| - 1, 2)`: an upper bound on the nonadjacent pairs the
    /// trees can join, since each tree's own edges are adjacent pairs.
    pub fn pair_capacity(&self) -> usize {
        self.trees.iter().map(|t| choose2(t.order() - 1)).sum()
    }

    /// Checks every feasibility constraint, plus pairwise intersection in at
    /// most one vertex when `simple` is set.
    pub fn check(&self, g: &Graph, simple: bool) -> Result<(), Infeasible> {
        let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
        for (i, t) in self.trees.iter().enumerate() {
            if !t.is_nontrivial() {
                return Err(Infeasible::Trivial(i));
            }
            for &e in t.edges() {
                if e.v() >= g.order() || !g.has_edge(e.u(), e.v()) {
                    return Err(Infeasible::ForeignEdge { tree: i, edge: e });
                }
                if let Some(&a) = owner.get(&e) {
                    return Err(Infeasible::SharedEdge { a, b: i, edge: e });
                }
                owner.insert(e, i);
            }
            if !t.is_tree() {
                return Err(Infeasible::NotATree(i));
            }
        }
        for (a, ta) in self.trees.iter().enumerate() {
            for (b, tb) in self.trees.iter().enumerate().skip(a + 1) {
                let shared = ta.internal() & tb.internal();
                if shared != 0 {
                    return Err(Infeasible::SharedInternal {
                        a,
                        b,
                        vertex: shared.trailing_zeros() as usize,
                    });
                }
                if simple && (ta.vertices() & tb.vertices()).count_ones() > 1 {
                    return Err(Infeasible::NotSimple { a, b });
                }
            }
        }
        for e in g.non_edges() {
            if !self
                .trees
                .iter()
                .any(|t| t.vertices() & e.mask() == e.mask())
            {
                return Err(Infeasible::Uncovered(e));
            }
        }
        Ok(())
    }
}
