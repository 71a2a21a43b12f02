//! Exact `tmc` by branch and bound over collections of color trees.
//!
//! A TMC-coloring that uses the maximum number of colors can be described by
//! its nontrivial color trees: pairwise edge-disjoint, with disjoint internal
//! vertex sets, and with every nonadjacent pair inside some tree. Such a
//! collection forfeits `Σ (|E(T)| - 1 + |internal(T)|)` of the `m + n`
//! available colors, so `tmc = m + n - (minimum waste)`.
//!
//! The search repeatedly takes the first pair not yet joined and branches on
//! the tree that will join it. In simple mode trees meet in at most one
//! vertex; then only the vertex set `S` and the internal set matter, and the
//! internal set may be taken to be an inclusion-minimal connected dominating
//! set of `G[S]` (shrinking internals never breaks feasibility and never adds
//! waste). Unrestricted mode branches over every spanning tree of `G[S]` and
//! serves as the reference for small orders.

use super::bounds::{complement_bound, multipartite_trees, theorem1_collection, verified};
use super::leaves::{is_connected_dominating, tree_with_internal};
use super::{SolverError, TreeCollection};
use crate::coloring::{count_colors, ColorTree, TotalColoring};
use crate::graph::{bit, choose2, members, pair_index, Edge, Graph, VertexSet};
use serde::{Deserialize, Serialize};

pub const SIMPLE_MAX_ORDER: usize = 8;
pub const UNRESTRICTED_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Color trees pairwise share at most one vertex.
    Simple,
    /// Any edge-disjoint trees with disjoint internal sets.
    Unrestricted,
}

impl Mode {
    pub fn max_order(self) -> usize {
        match self {
            Mode::Simple => SIMPLE_MAX_ORDER,
            Mode::Unrestricted => UNRESTRICTED_MAX_ORDER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmcResult {
    pub value: usize,
    pub waste: usize,
    pub witness: TotalColoring,
    pub trees: TreeCollection,
    /// Search nodes expanded.
    pub node_count: u64,
}

pub fn tmc_exact(g: &Graph, mode: Mode) -> Result<TmcResult, SolverError> {
    let n = g.order();
    if n > mode.max_order() {
        return Err(SolverError::OrderCap {
            n,
            cap: mode.max_order(),
        });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let total = g.size() + n;
    let missing = nonadjacent_mask(g);
    if missing == 0 {
        return finish(g, TreeCollection::default(), 0);
    }

    let candidates = match mode {
        Mode::Simple => simple_candidates(g, missing),
        Mode::Unrestricted => tree_candidates(g, missing),
    };
    let (seed_waste, seed) = seed(g, mode)?;

    let mut search = Search::new(&candidates, seed_waste as u32);
    search.descend(missing, 0, 0, 0);

    let trees = match search.best_choice {
        Some(choice) => TreeCollection::new(
            choice
                .iter()
                .map(|&i| ColorTree::from_edges(candidates[i as usize].edges.clone()))
                .collect(),
        ),
        None => seed,
    };
    debug_assert_eq!(trees.check(g, mode == Mode::Simple), Ok(()));
    assert!(
        trees.pair_capacity() >= missing.count_ones() as usize,
        "collection joins more pairs than its trees can hold"
    );
    let mut result = finish(g, trees, search.nodes)?;
    debug_assert_eq!(result.value + result.waste, total);
    result.node_count = search.nodes;
    Ok(result)
}

fn finish(g: &Graph, trees: TreeCollection, nodes: u64) -> Result<TmcResult, SolverError> {
    let witness = verified(g, &trees)?;
    let waste = trees.waste();
    let value = g.size() + g.order() - waste;
    assert_eq!(
        count_colors(&witness),
        value,
        "witness color count disagrees with waste"
    );
    Ok(TmcResult {
        value,
        waste,
        witness,
        trees,
        node_count: nodes,
    })
}

/// Best constructive collection valid for `mode`.
fn seed(g: &Graph, mode: Mode) -> Result<(usize, TreeCollection), SolverError> {
    let simple = mode == Mode::Simple;
    let mut options = vec![theorem1_collection(g)?];
    if let Ok(b) = complement_bound(g) {
        options.push(b.trees);
    }
    if let Some(parts) = multipartite_classes(g) {
        options.push(TreeCollection::new(multipartite_trees(&parts)));
    }
    let best = options
        .into_iter()
        .filter(|t| t.check(g, simple).is_ok())
        .min_by_key(TreeCollection::waste)
        .expect("the spanning-tree collection is always feasible");
    Ok((best.waste(), best))
}

/// Vertex classes when `g` is complete multipartite with at least two parts.
fn multipartite_classes(g: &Graph) -> Option<Vec<VertexSet>> {
    let comp = g.complement();
    let mut left = g.vertices();
    let mut parts = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let class = comp.reach(v, left);
        for w in members(class) {
            if (comp.neighbors(w) | bit(w)) != class {
                return None;
            }
        }
        parts.push(class);
        left &= !class;
    }
    if parts.len() < 2 {
        return None;
    }
    parts.sort_by_key(|p| (std::cmp::Reverse(p.count_ones()), *p));
    Some(parts)
}

fn nonadjacent_mask(g: &Graph) -> u64 {
    g.non_edges()
        .iter()
        .fold(0, |acc, e| acc | 1 << pair_index(e.u(), e.v()))
}

fn pairs_within(set: VertexSet) -> u64 {
    let mut mask = 0;
    for j in members(set) {
        for i in members(set & (bit(j) - 1)) {
            mask |= 1 << pair_index(i, j);
        }
    }
    mask
}

#[derive(Debug, Clone)]
struct Candidate {
    internal: VertexSet,
    /// Pairs the tree occupies: all pairs of its vertex set in simple mode,
    /// its edges in unrestricted mode. Chosen trees have disjoint footprints.
    footprint: u64,
    /// Nonadjacent pairs the tree joins.
    covers: u64,
    cost: u32,
    edges: Vec<Edge>,
    order_key: (u32, VertexSet, VertexSet),
}

/// Sets that can host a useful tree: at least three vertices, connected,
/// containing a nonadjacent pair.
fn host_sets(g: &Graph, missing: u64) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
    (1..=g.vertices()).filter_map(move |s: VertexSet| {
        if s.count_ones() < 3 {
            return None;
        }
        let covers = pairs_within(s) & missing;
        (covers != 0 && g.is_connected_within(s)).then_some((s, covers))
    })
}

fn simple_candidates(g: &Graph, missing: u64) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (s, covers) in host_sets(g, missing) {
        let size = s.count_ones();
        let mut minimal: Vec<VertexSet> = Vec::new();
        for k in 1..size {
            let mut sub: VertexSet = 0;
            loop {
                sub = sub.wrapping_sub(s) & s;
                if sub == 0 {
                    break;
                }
                if sub.count_ones() != k || minimal.iter().any(|&d| d & !sub == 0) {
                    continue;
                }
                if is_connected_dominating(g, s, sub) {
                    minimal.push(sub);
                }
            }
        }
        for internal in minimal {
            let edges = tree_with_internal(g, s, internal);
            debug_assert_eq!(ColorTree::from_edges(edges.clone()).internal(), internal);
            let cost = size - 2 + internal.count_ones();
            out.push(Candidate {
                internal,
                footprint: pairs_within(s),
                covers,
                cost,
                edges,
                order_key: (cost, s, internal),
            });
        }
    }
    out
}

fn tree_candidates(g: &Graph, missing: u64) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (s, covers) in host_sets(g, missing) {
        let size = s.count_ones() as usize;
        let local: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| s & e.mask() == e.mask())
            .collect();
        for pick in 1u64..(1 << local.len()) {
            if pick.count_ones() as usize != size - 1 {
                continue;
            }
            let edges: Vec<Edge> = members(pick).map(|i| local[i]).collect();
            let tree = ColorTree::from_edges(edges.clone());
            if tree.vertices() != s || !tree.is_tree() {
                continue;
            }
            let footprint = edges
                .iter()
                .fold(0, |acc, e| acc | 1 << pair_index(e.u(), e.v()));
            let cost = tree.waste() as u32;
            out.push(Candidate {
                internal: tree.internal(),
                footprint,
                covers,
                cost,
                edges,
                order_key: (cost, s, footprint),
            });
        }
    }
    out
}

fn lcm_upto(k: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=k).fold(1, |acc, x| acc / gcd(acc, x) * x)
}

struct Search<'a> {
    candidates: &'a [Candidate],
    by_pair: Vec<Vec<u32>>,
    /// Per pair, the cheapest share of any tree's cost split evenly over the
    /// pairs it joins, scaled by `scale` to stay integral.
    share: Vec<u64>,
    scale: u64,
    best: u32,
    best_choice: Option<Vec<u32>>,
    chosen: Vec<u32>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(candidates: &'a [Candidate], incumbent: u32) -> Self {
        let pairs = choose2(64.min(crate::graph::MAX_ORDER)).min(64);
        let widest = candidates
            .iter()
            .map(|c| c.covers.count_ones())
            .max()
            .unwrap_or(1);
        let scale = lcm_upto(widest as u64);
        let mut by_pair: Vec<Vec<u32>> = vec![Vec::new(); pairs];
        let mut share = vec![u64::MAX; pairs];
        for (i, c) in candidates.iter().enumerate() {
            let part = c.cost as u64 * scale / c.covers.count_ones() as u64;
            for p in members(c.covers) {
                by_pair[p].push(i as u32);
                share[p] = share[p].min(part);
            }
        }
        for list in &mut by_pair {
            list.sort_by_key(|&i| &candidates[i as usize].order_key);
        }
        Search {
            candidates,
            by_pair,
            share,
            scale,
            best: incumbent,
            best_choice: None,
            chosen: Vec::new(),
            nodes: 0,
        }
    }

    fn descend(&mut self, uncovered: u64, footprint: u64, internal: VertexSet, cost: u32) {
        self.nodes += 1;
        if uncovered == 0 {
            if cost < self.best {
                self.best = cost;
                self.best_choice = Some(self.chosen.clone());
            }
            return;
        }
        // Every remaining pair must be paid for by some tree; this subsumes
        // the count bound Σ C(|V(T)| - 1, 2) >= pairs left.
        let owed: u64 = members(uncovered).map(|p| self.share[p]).sum();
        if cost + owed.div_ceil(self.scale) as u32 >= self.best {
            return;
        }
        let pair = uncovered.trailing_zeros() as usize;
        for k in 0..self.by_pair[pair].len() {
            let ci = self.by_pair[pair][k];
            let c = &self.candidates[ci as usize];
            if cost + c.cost >= self.best {
                break;
            }
            if c.footprint & footprint != 0 || c.internal & internal != 0 {
                continue;
            }
            let (covers, fp, int, step) = (c.covers, c.footprint, c.internal, c.cost);
            self.chosen.push(ci);
            self.descend(
                uncovered & !covers,
                footprint | fp,
                internal | int,
                cost + step,
            );
            self.chosen.pop();
        }
    }
}
