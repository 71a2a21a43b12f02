//! Extremal graph families with their predicted `tmc` values.
//!
//! Labeling conventions, fixed so canonical forms are reproducible:
//! - `gts`: `u = 0`, `v = 1`, the rest of the clique on `2..=t`, and the path
//!   `u, t+1, ..., n-1, v` last. Deleted edges join `u` to `2..=s+1`.
//! - `gnt`: classes of size two first (`{0,1}, {2,3}, ...`), the class of size
//!   `t` last; the distinguished vertex of each class is its smallest.
//! - `gstar` and `multipartite`: parts laid out as consecutive blocks in the
//!   given order; `gstar` puts its singletons first and the big part last,
//!   with extra edges added inside the big part in lexicographic order.
//! - `star`: centre `0`. `path`: `0-1-...-(n-1)`.

use crate::graph::{choose2, Graph, GraphError, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    Params {
        family: &'static str,
        reason: String,
    },
    #[error("{family}: no valid parameters for n = {n}")]
    EmptyRange { family: &'static str, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn params(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Params {
        family,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Gts { n: usize, t: usize, s: usize },
    Gnt { n: usize, p: usize, t: usize },
    Gstar { n: usize, t: usize, extra: usize },
    Multipartite { parts: Vec<usize> },
    Complete { n: usize },
    Star { n: usize },
    Path { n: usize },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Gts { .. } => "GTS",
            Family::Gnt { .. } => "GNT",
            Family::Gstar { .. } => "GSTAR",
            Family::Multipartite { .. } => "MULTIPARTITE",
            Family::Complete { .. } => "COMPLETE",
            Family::Star { .. } => "STAR",
            Family::Path { .. } => "PATH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub predicted_tmc: usize,
    pub family: Family,
}

/// `K_{t+1}` with one edge `uv` stretched into a path of `n - t` edges, then
/// `s` edges from `u` into the clique removed. `tmc = m - n + 2 + t`.
pub fn gen_gts(n: usize, t: usize, s: usize) -> Result<FamilyInstance, FamilyError> {
    if t < 2 || t + 2 > n {
        return Err(params(
            "gts",
            format!("need 2 <= t <= n-2, got n={n}, t={t}"),
        ));
    }
    if s >= t {
        return Err(params(
            "gts",
            format!("need 0 <= s <= t-1, got t={t}, s={s}"),
        ));
    }
    let mut g = Graph::empty(n)?;
    let clique: Vec<usize> = std::iter::once(0).chain(1..=t).collect();
    for (a, &x) in clique.iter().enumerate() {
        for &y in &clique[a + 1..] {
            if (x, y) != (0, 1) {
                g.add_edge(x, y);
            }
        }
    }
    let path: Vec<usize> = std::iter::once(0)
        .chain(t + 1..n)
        .chain(std::iter::once(1))
        .collect();
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    for x in 2..s + 2 {
        g.remove_edge(0, x);
    }
    debug_assert_eq!(g.size(), n + choose2(t) - 1 - s);
    let predicted_tmc = g.size() + 2 + t - n;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc,
        family: Family::Gts { n, t, s },
    })
}

/// `K_n` with its vertices split into `n - p - 1` pairs and one class of size
/// `t = 2(p+1) - n`, then each class's first vertex cut from the rest of its
/// class. `tmc = m = C(n,2) - p`.
pub fn gen_gnt(n: usize, p: usize) -> Result<FamilyInstance, FamilyError> {
    if 2 * p <= n || p + 2 >= n {
        if gnt_range(n).is_empty() {
            return Err(FamilyError::EmptyRange { family: "gnt", n });
        }
        return Err(params(
            "gnt",
            format!("need n/2 < p < n-2, got n={n}, p={p}"),
        ));
    }
    build_gnt(n, p)
}

/// The odd-order boundary case `t = 3`, `p = (n+1)/2`, which sits outside the
/// `p < n - 2` range when `n = 5`.
pub fn gen_gnt3(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(params("gnt3", format!("need odd n >= 5, got {n}")));
    }
    build_gnt(n, n.div_ceil(2))
}

/// Values of `p` accepted by [`gen_gnt`].
pub fn gnt_range(n: usize) -> std::ops::Range<usize> {
    (n / 2 + 1)..n.saturating_sub(2).max(n / 2 + 1)
}

fn build_gnt(n: usize, p: usize) -> Result<FamilyInstance, FamilyError> {
    let t = 2 * (p + 1) - n;
    let mut g = Graph::complete(n)?;
    let mut start = 0;
    for size in std::iter::repeat_n(2, n - p - 1).chain(std::iter::once(t)) {
        for w in start + 1..start + size {
            g.remove_edge(start, w);
        }
        start += size;
    }
    debug_assert_eq!(g.size(), choose2(n) - p);
    let predicted_tmc = g.size();
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc,
        family: Family::Gnt { n, p, t },
    })
}

/// Complete multipartite graph with `n - t` singletons and one part of size
/// `t`, plus `extra <= t - 2` edges inside the big part. `tmc = m + n - t`.
pub fn gen_gstar(n: usize, t: usize, extra: usize) -> Result<FamilyInstance, FamilyError> {
    if t < 2 || t >= n {
        return Err(params(
            "gstar",
            format!("need 2 <= t <= n-1, got n={n}, t={t}"),
        ));
    }
    if extra + 2 > t {
        return Err(params(
            "gstar",
            format!("need extra <= t-2, got t={t}, extra={extra}"),
        ));
    }
    let mut parts = vec![1; n - t];
    parts.push(t);
    let (mut g, _) = layout_parts(&parts)?;
    let big = n - t..n;
    let inside = big.clone().flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    for (a, b) in inside.take(extra) {
        g.add_edge(a, b);
    }
    debug_assert_eq!(g.size(), choose2(n - t) + t * (n - t) + extra);
    let predicted_tmc = g.size() + n - t;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc,
        family: Family::Gstar { n, t, extra },
    })
}

/// `K_{n_1,...,n_r}` with `r >= 2`; `tmc = m + r - t` where `t` counts parts
/// of size at least two.
pub fn gen_multipartite(parts: &[usize]) -> Result<FamilyInstance, FamilyError> {
    let (g, _) = layout_parts(parts)?;
    let r = parts.len();
    let t = parts.iter().filter(|&&p| p >= 2).count();
    let predicted_tmc = g.size() + r - t;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc,
        family: Family::Multipartite {
            parts: parts.to_vec(),
        },
    })
}

pub fn gen_complete(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n == 0 {
        return Err(params("complete", "need n >= 1"));
    }
    let g = Graph::complete(n)?;
    let predicted_tmc = g.size() + n;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc,
        family: Family::Complete { n },
    })
}

pub fn gen_star(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(params("star", format!("need n >= 3, got {n}")));
    }
    let g = Graph::from_edges(n, (1..n).map(|i| (0, i)))?;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc: n,
        family: Family::Star { n },
    })
}

pub fn gen_path(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 2 {
        return Err(params("path", format!("need n >= 2, got {n}")));
    }
    let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
    Ok(FamilyInstance {
        graph: g,
        predicted_tmc: 3,
        family: Family::Path { n },
    })
}

/// Complete multipartite graph on consecutive vertex blocks.
pub(crate) fn layout_parts(parts: &[usize]) -> Result<(Graph, Vec<VertexSet>), FamilyError> {
    if parts.len() < 2 {
        return Err(params("multipartite", "need at least two parts"));
    }
    if parts.contains(&0) {
        return Err(params("multipartite", "parts must be nonempty"));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut blocks = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &size in parts {
        blocks.push(((1u64 << size) - 1) << start);
        start += size;
    }
    for (i, &a) in blocks.iter().enumerate() {
        for &b in &blocks[i + 1..] {
            for x in crate::graph::members(a) {
                for y in crate::graph::members(b) {
                    g.add_edge(x, y);
                }
            }
        }
    }
    Ok((g, blocks))
}

/// Partitions of `n` into at least two parts, parts non-increasing, in
/// reverse lexicographic order.
pub fn part_profiles(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
