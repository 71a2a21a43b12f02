//! Reference implementations that share no code with the library beyond the
//! `Graph` container: brute-force colorings, labeled-graph deduplication,
//! orbit counting, and spanning-tree enumeration.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use tmc_core::graph::{graph6_decode, Graph};

pub const ATLAS: &str = include_str!("../data/atlas_connected.g6");
pub const CORPUS: &str = include_str!("../data/corpus.g6");
pub const CORPUS_FACTS: &str = include_str!("../data/corpus_facts.jsonl");

pub fn atlas(n: usize) -> Vec<Graph> {
    ATLAS
        .lines()
        .map(|l| graph6_decode(l).unwrap())
        .filter(|g| g.order() == n)
        .collect()
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether a total coloring joins every pair by a path whose edges and inner
/// vertices all share one color. `colors[..m]` are edge colors aligned with
/// `edges`, `colors[m..]` vertex colors.
pub fn joins_all_pairs(n: usize, edges: &[(usize, usize)], colors: &[usize]) -> bool {
    let m = edges.len();
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, colors[i]));
        adj[b].push((a, colors[i]));
    }
    for x in 0..n {
        for y in x + 1..n {
            let mut ok = false;
            for &(z, c) in &adj[x] {
                if z == y {
                    ok = true;
                    break;
                }
                // Walk from x through inner vertices of color c along edges of color c.
                if colors[m + z] != c {
                    continue;
                }
                let mut seen = vec![false; n];
                seen[x] = true;
                seen[z] = true;
                let mut queue = VecDeque::from([z]);
                while let Some(u) = queue.pop_front() {
                    for &(w, d) in &adj[u] {
                        if d != c || seen[w] {
                            continue;
                        }
                        if w == y {
                            ok = true;
                            break;
                        }
                        seen[w] = true;
                        if colors[m + w] == c {
                            queue.push_back(w);
                        }
                    }
                    if ok {
                        break;
                    }
                }
                if ok {
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

/// `tmc` by trying every partition of edges and vertices into color classes.
pub fn brute_tmc(g: &Graph) -> usize {
    let n = g.order();
    let edges = edge_list(g);
    let total = edges.len() + n;
    let mut colors = vec![0usize; total];
    let mut best = 0;
    fn go(
        i: usize,
        used: usize,
        colors: &mut Vec<usize>,
        n: usize,
        edges: &[(usize, usize)],
        best: &mut usize,
    ) {
        let total = colors.len();
        if used + (total - i) <= *best {
            return;
        }
        if i == total {
            if joins_all_pairs(n, edges, colors) {
                *best = used;
            }
            return;
        }
        for c in (0..=used).rev() {
            colors[i] = c;
            go(i + 1, used.max(c + 1), colors, n, edges, best);
        }
    }
    go(0, 0, &mut colors, n, &edges, &mut best);
    best
}

/// Connected graphs of order `n` up to isomorphism, by brute force over all
/// labeled graphs, keyed by the largest adjacency code over all relabelings.
pub fn dedup_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if !connected(&adj) {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u64, |acc, (i, &(a, b))| {
                    acc | (((adj[p[a]] >> p[b]) & 1) << i)
                })
            })
            .max()
            .unwrap();
        seen.insert(key);
    }
    seen.len()
}

fn connected(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        for (v, &row) in adj.iter().enumerate().take(n) {
            if reach >> v & 1 == 1 {
                next |= row;
            }
        }
        if next == reach {
            return reach.count_ones() as usize == n;
        }
        reach = next;
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of graphs on `n` unlabeled vertices, by averaging `2^(edge-orbits)`
/// over cycle types of the symmetric group.
pub fn all_graph_count(n: usize) -> u128 {
    fn partitions(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=cap.min(left)).rev() {
            cur.push(k);
            partitions(left - k, k, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut sum = 0u128;
    for p in parts {
        let mut orbits = 0u32;
        for (i, &a) in p.iter().enumerate() {
            orbits += (a / 2) as u32;
            for &b in &p[i + 1..] {
                orbits += gcd(a as u128, b as u128) as u32;
            }
        }
        // Permutations with this cycle type: n! / prod(k^{m_k} m_k!).
        let mut z = 1u128;
        for k in 1..=n {
            let mk = p.iter().filter(|&&x| x == k).count();
            z *= (k as u128).pow(mk as u32) * fact(mk);
        }
        sum += (fact(n) / z) << orbits;
    }
    sum / fact(n)
}

/// Connected counts for orders `1..=max` by inverting the Euler transform.
pub fn connected_counts(max: usize) -> Vec<i128> {
    let a: Vec<i128> = (0..=max).map(|n| all_graph_count(n) as i128).collect();
    let mut b = vec![0i128; max + 1];
    for n in 1..=max {
        let mut v = n as i128 * a[n];
        for k in 1..n {
            v -= b[k] * a[n - k];
        }
        b[n] = v;
    }
    let mobius = |mut k: usize| -> i128 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= k {
            if k.is_multiple_of(p) {
                k /= p;
                if k.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if k > 1 {
            sign = -sign;
        }
        sign
    };
    (1..=max)
        .map(|n| {
            (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(n / d) * b[d])
                .sum::<i128>()
                / n as i128
        })
        .collect()
}

/// Largest leaf count over all spanning trees, by trying every `n - 1` edge
/// subset.
pub fn brute_max_leaves(g: &Graph) -> usize {
    let n = g.order();
    if n <= 2 {
        return n;
    }
    let edges = edge_list(g);
    let mut best = 0;
    let mut pick = Vec::new();
    fn go(
        start: usize,
        edges: &[(usize, usize)],
        n: usize,
        pick: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if pick.len() == n - 1 {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            let mut deg = vec![0; n];
            for &i in pick.iter() {
                let (a, b) = edges[i];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return;
                }
                parent[ra] = rb;
                deg[a] += 1;
                deg[b] += 1;
            }
            *best = (*best).max(deg.iter().filter(|&&d| d == 1).count());
            return;
        }
        for i in start..edges.len() {
            if edges.len() - i < n - 1 - pick.len() {
                break;
            }
            pick.push(i);
            go(i + 1, edges, n, pick, best);
            pick.pop();
        }
    }
    go(0, &edges, n, &mut pick, &mut best);
    best
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, e).unwrap()
}

/// Connected graphs of order `n` up to isomorphism, built by adding a vertex
/// with every nonempty neighborhood to each class of order `n - 1` (every
/// connected graph has a vertex whose removal keeps it connected) and keyed
/// by the largest adjacency code over all relabelings.
pub fn extension_dedup_count(n: usize) -> usize {
    extension_classes(n).len()
}

fn extension_classes(n: usize) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeMap::new();
    for base in extension_classes(n - 1) {
        for nb in 1u64..(1 << (n - 1)) {
            let mut adj = base.clone();
            adj.push(nb);
            for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                if nb >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            let key = perms
                .iter()
                .map(|p| {
                    pairs.iter().enumerate().fold(0u64, |acc, (i, &(a, b))| {
                        acc | (((adj[p[a]] >> p[b]) & 1) << i)
                    })
                })
                .max()
                .unwrap();
            seen.entry(key).or_insert(adj);
        }
    }
    seen.into_values().collect()
}
