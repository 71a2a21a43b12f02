use super::SolverError;
use crate::graph::{bit, choose2, members, Edge, Graph, VertexSet};

/// Largest order for which [`max_leaf_spanning_tree`] is exact.
pub const LEAF_MAX_ORDER: usize = 10;

/// A spanning tree with the maximum number of leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeResult {
    pub leaves: usize,
    pub internal: usize,
    pub tree: Vec<Edge>,
}

/// Exact `l(G)` with a witness tree.
///
/// For `n >= 3` the internal vertices of any spanning tree form a connected
/// dominating set and every connected dominating set is the internal set of
/// some spanning tree, so `l(G) = n - γ_c(G)`. The smallest such set is found
/// by scanning vertex subsets in order of size.
pub fn max_leaf_spanning_tree(g: &Graph) -> Result<SpanningTreeResult, SolverError> {
    let n = g.order();
    if n > LEAF_MAX_ORDER {
        return Err(SolverError::OrderCap {
            n,
            cap: LEAF_MAX_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    match n {
        1 => Ok(SpanningTreeResult {
            leaves: 0,
            internal: 1,
            tree: vec![],
        }),
        2 => Ok(SpanningTreeResult {
            leaves: 2,
            internal: 0,
            tree: vec![Edge::new(0, 1)],
        }),
        _ => {
            let all = g.vertices();
            let core = min_connected_dominating_set(g, all);
            let tree = tree_with_internal(g, all, core);
            let internal = core.count_ones() as usize;
            Ok(SpanningTreeResult {
                leaves: n - internal,
                internal,
                tree,
            })
        }
    }
}

/// Smallest connected dominating set of `G[within]`, ties broken by the
/// numerically smallest mask. `G[within]` must be connected with at least
/// two vertices.
pub(crate) fn min_connected_dominating_set(g: &Graph, within: VertexSet) -> VertexSet {
    let size = within.count_ones();
    for k in 1..=size {
        let mut sub: VertexSet = 0;
        loop {
            sub = sub.wrapping_sub(within) & within;
            if sub == 0 {
                break;
            }
            if sub.count_ones() == k && is_connected_dominating(g, within, sub) {
                return sub;
            }
        }
    }
    unreachable!("a connected induced subgraph dominates itself")
}

pub(crate) fn is_connected_dominating(g: &Graph, within: VertexSet, core: VertexSet) -> bool {
    let mut closed = core;
    for v in members(core) {
        closed |= g.neighbors(v);
    }
    closed & within == within && g.is_connected_within(core)
}

/// A spanning tree of `G[within]` whose internal vertices lie in `core`:
/// a breadth-first tree of `G[core]` with every other vertex hung on its
/// smallest neighbor in `core`.
pub(crate) fn tree_with_internal(g: &Graph, within: VertexSet, core: VertexSet) -> Vec<Edge> {
    let mut edges = Vec::new();
    let root = core.trailing_zeros() as usize;
    let mut seen = bit(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in members(g.neighbors(v) & core & !seen) {
            seen |= bit(w);
            edges.push(Edge::new(v, w));
            queue.push_back(w);
        }
    }
    for v in members(within & !core) {
        let hub = (g.neighbors(v) & core).trailing_zeros() as usize;
        edges.push(Edge::new(v, hub));
    }
    edges.sort();
    edges
}

/// For every `t <= n - 3` with `m >= n + C(t, 2)`, checks that the exact leaf
/// number is at least `t + 1`.
pub fn djs_bound_holds(g: &Graph) -> Result<bool, SolverError> {
    let n = g.order();
    let m = g.size();
    if n < 3 {
        if !g.is_connected() {
            return Err(SolverError::Disconnected);
        }
        return Ok(true);
    }
    let l = max_leaf_spanning_tree(g)?.leaves;
    Ok((0..=n - 3).all(|t| m < n + choose2(t) || l > t))
}
