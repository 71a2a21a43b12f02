use super::{bit, choose2, Graph};
use thiserror::Error;

/// Largest order accepted by the permutation-based canonicalizer.
pub const CANON_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {0} too large for exhaustive canonicalization (max {CANON_MAX_ORDER})")]
pub struct CanonOrderError(pub usize);

/// Lexicographically minimal upper-triangle bit string over all relabelings,
/// packed into the low `C(n,2)` bits of a `u64` with the first string bit most
/// significant. Bits are read column by column: (0,1), (0,2), (1,2), (0,3), ...
///
/// The search places vertices position by position and drops any branch whose
/// prefix already exceeds the best complete string found.
pub fn canonical_key(g: &Graph) -> Result<u64, CanonOrderError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonOrderError(n));
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut search = Search {
        rows: g.rows(),
        n,
        total_bits: choose2(n) as u32,
        perm: Vec::with_capacity(n),
        best: u64::MAX,
    };
    search.descend(0, 0, 0);
    Ok(search.best)
}

/// Canonical form as bytes: the order, then the canonical bit string packed
/// most-significant-bit first and zero padded to a whole byte.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, CanonOrderError> {
    let key = canonical_key(g)?;
    let bits = choose2(g.order());
    let nbytes = bits.div_ceil(8);
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(g.order() as u8);
    if nbytes > 0 {
        let aligned = key << (nbytes * 8 - bits);
        for i in (0..nbytes).rev() {
            out.push((aligned >> (8 * i)) as u8);
        }
    }
    Ok(out)
}

/// Rebuilds the labeled graph whose upper-triangle string is `key`.
pub(crate) fn graph_from_key(n: usize, key: u64) -> Graph {
    let total = choose2(n);
    let mut g = Graph::empty(n).expect("order checked by caller");
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (key >> (total - 1 - idx)) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    g
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    total_bits: u32,
    perm: Vec<usize>,
    best: u64,
}

impl Search<'_> {
    fn descend(&mut self, used: u64, prefix: u64, len: u32) {
        let pos = self.perm.len();
        if pos == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        let new_len = len + pos as u32;
        for v in 0..self.n {
            if used & bit(v) != 0 {
                continue;
            }
            let mut column = 0u64;
            for &w in &self.perm {
                column = (column << 1) | ((self.rows[w] >> v) & 1);
            }
            let candidate = (prefix << pos) | column;
            let bound = if self.best == u64::MAX {
                u64::MAX
            } else {
                self.best >> (self.total_bits - new_len)
            };
            if candidate > bound {
                continue;
            }
            self.perm.push(v);
            self.descend(used | bit(v), candidate, new_len);
            self.perm.pop();
        }
    }
}
