use super::{bit, members, Graph};
use serde::{Deserialize, Serialize};

/// Structural facts about a graph, including the five sufficient conditions
/// for `tmc(G) = m - n + 2 + l(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPredicateReport {
    pub connected: bool,
    pub k3_free: bool,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub has_cut_vertex: bool,
    pub max_degree: usize,
    pub complement_4_connected: bool,
    /// `Δ < n - (2m - 3(n-1)) / (n-3)`; `None` when `n <= 3`.
    pub degree_condition: Option<bool>,
    pub theorem2_applicable: bool,
}

pub fn predicates(g: &Graph) -> GraphPredicateReport {
    let n = g.order();
    let connected = g.is_connected();
    let k3_free = is_triangle_free(g);
    let diameter = diameter(g);
    let has_cut_vertex = has_cut_vertex(g);
    let max_degree = g.max_degree();
    let complement_4_connected = is_k_connected(&g.complement(), 4);
    let degree_condition = degree_condition(g);
    let theorem2_applicable = connected
        && n > 3
        && (complement_4_connected
            || k3_free
            || degree_condition == Some(true)
            || diameter.is_some_and(|d| d >= 3)
            || has_cut_vertex);
    GraphPredicateReport {
        connected,
        k3_free,
        diameter,
        has_cut_vertex,
        max_degree,
        complement_4_connected,
        degree_condition,
        theorem2_applicable,
    }
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|e| g.neighbors(e.u()) & g.neighbors(e.v()) == 0)
}

fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    let all = g.vertices();
    let mut seen = bit(v);
    let mut frontier = seen;
    let mut depth = 0;
    while seen != all {
        let mut next = 0;
        for w in members(frontier) {
            next |= g.neighbors(w);
        }
        next &= !seen;
        if next == 0 {
            return None;
        }
        seen |= next;
        frontier = next;
        depth += 1;
    }
    Some(depth)
}

fn diameter(g: &Graph) -> Option<usize> {
    (0..g.order())
        .map(|v| eccentricity(g, v))
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
}

fn components(g: &Graph, within: u64) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        left &= !g.reach(start, left);
        count += 1;
    }
    count
}

fn has_cut_vertex(g: &Graph) -> bool {
    let all = g.vertices();
    let base = components(g, all);
    (0..g.order()).any(|v| components(g, all & !bit(v)) > base - usize::from(g.degree(v) == 0))
}

/// Vertex connectivity at least `k`: more than `k` vertices and no separating
/// set of fewer than `k` vertices, checked by removing every such subset.
fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    let all = g.vertices();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((next, removed)) = stack.pop() {
        if !g.is_connected_within(all & !removed) {
            return false;
        }
        if (removed.count_ones() as usize) < k - 1 {
            for v in next..n {
                stack.push((v + 1, removed | bit(v)));
            }
        }
    }
    true
}

fn degree_condition(g: &Graph) -> Option<bool> {
    let n = g.order() as i64;
    if n <= 3 {
        return None;
    }
    let m = g.size() as i64;
    let delta = g.max_degree() as i64;
    // Δ < n - (2m - 3(n-1))/(n-3), scaled by n - 3 > 0.
    Some(delta * (n - 3) < n * (n - 3) - (2 * m - 3 * (n - 1)))
}
