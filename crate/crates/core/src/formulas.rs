//! Closed forms for `f(n,k)`, the least size forcing `tmc >= k`, and
//! `g(n,k)`, the greatest size guaranteeing `tmc <= k`, over connected graphs
//! of order `n`.
//!
//! Each piecewise case is written as its own predicate. [`f_cases`] and
//! [`g_cases`] return every case whose condition holds; the evaluators take
//! the first one. At `(n,k) = (3,3)` and `(4,5)` two conditions of `f` hold
//! at once and give the same value.

use crate::graph::choose2;
use serde::Serialize;
use std::fmt;
use std::io::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("order {0} below 3")]
    Order(usize),
    #[error("k = {k} outside [{lo}, {hi}] for n = {n}")]
    Domain {
        n: usize,
        k: usize,
        lo: usize,
        hi: usize,
    },
    #[error("csv: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    pub case: u8,
    pub t: Option<usize>,
    pub s: Option<usize>,
    pub r: Option<usize>,
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (case {}", self.value, self.case)?;
        for (name, v) in [("t", self.t), ("s", self.s), ("r", self.r)] {
            if let Some(v) = v {
                write!(f, ", {name}={v}")?;
            }
        }
        write!(f, ")")
    }
}

/// `g(n,k)` below `k = n` does not exist: the star has `tmc = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GValue {
    Value(FormulaResult),
    Undefined,
}

impl GValue {
    pub fn value(self) -> Option<usize> {
        match self {
            GValue::Value(r) => Some(r.value),
            GValue::Undefined => None,
        }
    }
}

impl fmt::Display for GValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GValue::Value(r) => r.fmt(f),
            GValue::Undefined => write!(f, "undefined"),
        }
    }
}

/// Largest `k` in either domain: `C(n,2) + n`.
pub fn top(n: usize) -> usize {
    choose2(n) + n
}

fn check(n: usize, k: usize, lo: usize) -> Result<(), FormulaError> {
    if n < 3 {
        return Err(FormulaError::Order(n));
    }
    if k < lo || k > top(n) {
        return Err(FormulaError::Domain {
            n,
            k,
            lo,
            hi: top(n),
        });
    }
    Ok(())
}

fn result(n: usize, k: usize, value: usize, case: u8) -> FormulaResult {
    FormulaResult {
        n,
        k,
        value,
        case,
        t: None,
        s: None,
        r: None,
    }
}

/// Every case of `f` whose condition holds at `(n,k)`, in case order.
pub fn f_cases(n: usize, k: usize) -> Result<Vec<FormulaResult>, FormulaError> {
    check(n, k, 3)?;
    let big = top(n);
    let half = n / 2;
    let odd = n % 2 == 1;
    let mut out = Vec::new();
    if k == 3 {
        out.push(result(n, k, n - 1, 1));
    }
    for t in 2..=n - 2 {
        let hi = choose2(t) + t + 2;
        if (hi + 1 - t..=hi).contains(&k) {
            let s = hi - k;
            out.push(FormulaResult {
                t: Some(t),
                s: Some(s),
                ..result(n, k, n + k - t - 2, 2)
            });
        }
    }
    let boundary = big - 3 * half;
    if choose2(n) + 4 <= k + n && k <= boundary && !(odd && k == boundary) {
        out.push(result(n, k, k, 3));
    }
    for r in 0..half {
        if big - 3 * (r + 1) < k && k <= big - 3 * r {
            out.push(FormulaResult {
                r: Some(r),
                ..result(n, k, choose2(n) - r, 4)
            });
        }
    }
    if odd && k == boundary {
        out.push(FormulaResult {
            r: Some(half),
            ..result(n, k, choose2(n) - half, 4)
        });
    }
    Ok(out)
}

pub fn f_eval(n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    let cases = f_cases(n, k)?;
    Ok(*cases
        .first()
        .unwrap_or_else(|| panic!("no case of f covers n={n}, k={k}")))
}

/// The band of `g` for parameter `t`: `[C(n-t,2) + t(n-t-1) + n, C(n-t,2) + t(n-t) + n - 1]`.
pub fn g_band(n: usize, t: usize) -> (usize, usize) {
    let base = choose2(n - t) + n;
    (base + t * (n - t - 1), base + t * (n - t) - 1)
}

/// Every case of `g` whose condition holds at `(n,k)`, for `n <= k`.
pub fn g_cases(n: usize, k: usize) -> Result<Vec<FormulaResult>, FormulaError> {
    check(n, k, n)?;
    let big = top(n);
    let mut out = Vec::new();
    for t in 2..n {
        let (lo, hi) = g_band(n, t);
        if lo <= k && k < hi {
            out.push(FormulaResult {
                t: Some(t),
                ..result(n, k, k + t - n, 1)
            });
        }
        if k == hi {
            out.push(FormulaResult {
                t: Some(t),
                ..result(n, k, k + t - n - 1, 2)
            });
        }
    }
    if k == big - 1 {
        out.push(result(n, k, choose2(n) - 1, 3));
    }
    if k == big {
        out.push(result(n, k, choose2(n), 4));
    }
    Ok(out)
}

/// `g(n,k)` for `3 <= k <= C(n,2) + n`; `Undefined` when `k < n`.
pub fn g_eval(n: usize, k: usize) -> Result<GValue, FormulaError> {
    check(n, k, 3)?;
    if k < n {
        return Ok(GValue::Undefined);
    }
    let cases = g_cases(n, k)?;
    Ok(GValue::Value(*cases.first().unwrap_or_else(|| {
        panic!("no case of g covers n={n}, k={k}")
    })))
}

/// `f(n,k)` for `k = 3..=C(n,2)+n`.
pub fn f_table(n: usize) -> Result<Vec<FormulaResult>, FormulaError> {
    check(n, 3, 3)?;
    let table: Vec<_> = (3..=top(n))
        .map(|k| f_eval(n, k))
        .collect::<Result<_, _>>()?;
    assert!(
        table.windows(2).all(|w| w[0].value <= w[1].value),
        "f table decreases at n={n}"
    );
    Ok(table)
}

/// `g(n,k)` for `k = n..=C(n,2)+n`.
pub fn g_table(n: usize) -> Result<Vec<FormulaResult>, FormulaError> {
    check(n, n, n)?;
    let table: Vec<_> = (n..=top(n))
        .map(|k| match g_eval(n, k)? {
            GValue::Value(r) => Ok(r),
            GValue::Undefined => unreachable!("k >= n"),
        })
        .collect::<Result<_, _>>()?;
    assert!(
        table.windows(2).all(|w| w[0].value <= w[1].value),
        "g table decreases at n={n}"
    );
    Ok(table)
}

/// Writes rows with header `n,k,value,case,t,s,r`; absent parameters are empty.
pub fn write_csv<W: Write>(rows: &[FormulaResult], out: W) -> Result<(), FormulaError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)
            .map_err(|e| FormulaError::Csv(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record(["n", "k", "value", "case", "t", "s", "r"])
            .map_err(|e| FormulaError::Csv(e.to_string()))?;
    }
    w.flush().map_err(|e| FormulaError::Csv(e.to_string()))
}
