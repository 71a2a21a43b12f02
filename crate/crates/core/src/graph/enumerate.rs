use super::canon::{canonical_key, graph_from_key};
use super::{bit, Graph};
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order [`enumerate_connected`] accepts.
pub const ENUM_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {0} outside enumeration range 1..={ENUM_MAX_ORDER}")]
pub struct EnumOrderError(pub usize);

/// One canonically labeled representative per isomorphism class of connected
/// graphs of order `n`, sorted by edge count and then canonical form.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// order `n` classes are reached by attaching a new vertex to some nonempty
/// neighborhood in each order `n - 1` class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumOrderError> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(EnumOrderError(n));
    }
    let mut level: BTreeSet<(usize, u64)> = BTreeSet::new();
    level.insert((0, 0));
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &(_, key) in &level {
            let base = graph_from_key(order - 1, key);
            let mut rows = base.rows().to_vec();
            rows.push(0);
            for nbrs in 1u64..(1 << (order - 1)) {
                let mut g_rows = rows.clone();
                g_rows[order - 1] = nbrs;
                for v in super::members(nbrs) {
                    g_rows[v] |= bit(order - 1);
                }
                let g = Graph::from_adjacency(g_rows).expect("symmetric by construction");
                let key = canonical_key(&g).expect("order within canonicalizer range");
                next.insert((g.size(), key));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(_, key)| graph_from_key(n, key))
        .collect())
}
