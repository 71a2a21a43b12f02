use super::{cache, HarnessError};
use crate::coloring::ColoringFile;
use crate::graph::{
    canonical_form, choose2, enumerate_connected, graph6_decode, graph6_encode, predicates, Graph,
    GraphPredicateReport,
};
use crate::solvers::{max_leaf_spanning_tree, tmc_exact, Mode, SolverError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Largest order built without the long-running flag.
pub const CENSUS_MAX_ORDER: usize = 7;
/// Largest order built at all.
pub const CENSUS_LONG_ORDER: usize = 8;

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub allow_long: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    /// Report progress on standard error.
    pub progress: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    /// Canonical form as lowercase hex.
    pub canonical: String,
    pub m: usize,
    pub leaves: usize,
    pub tmc: usize,
    pub waste: usize,
    pub predicates: GraphPredicateReport,
    pub witness: ColoringFile,
}

impl CensusRecord {
    pub fn graph(&self) -> Graph {
        graph6_decode(&self.graph6).expect("census records hold valid graph6")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeAggregate {
    pub m: usize,
    pub count: usize,
    pub min_tmc: usize,
    pub max_tmc: usize,
    /// First record, in census order, attaining `min_tmc`.
    pub argmin: String,
}

/// One record per isomorphism class of connected graphs of order `n`, in
/// enumeration order (size, then canonical form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmcCensus {
    pub n: usize,
    pub records: Vec<CensusRecord>,
}

impl TmcCensus {
    pub fn aggregates(&self) -> Vec<SizeAggregate> {
        let mut out: Vec<SizeAggregate> = Vec::new();
        for r in &self.records {
            match out.last_mut() {
                Some(a) if a.m == r.m => {
                    a.count += 1;
                    a.max_tmc = a.max_tmc.max(r.tmc);
                    if r.tmc < a.min_tmc {
                        a.min_tmc = r.tmc;
                        a.argmin = r.graph6.clone();
                    }
                }
                _ => out.push(SizeAggregate {
                    m: r.m,
                    count: 1,
                    min_tmc: r.tmc,
                    max_tmc: r.tmc,
                    argmin: r.graph6.clone(),
                }),
            }
        }
        out
    }

    pub fn min_tmc(&self, m: usize) -> Option<usize> {
        self.records
            .iter()
            .filter(|r| r.m == m)
            .map(|r| r.tmc)
            .min()
    }
}

pub(crate) fn census_record(g: &Graph) -> Result<CensusRecord, SolverError> {
    let result = tmc_exact(g, Mode::Simple)?;
    let leaves = max_leaf_spanning_tree(g)?.leaves;
    let form = canonical_form(g).map_err(|e| SolverError::Invalid(e.to_string()))?;
    Ok(CensusRecord {
        graph6: graph6_encode(g),
        canonical: form.iter().map(|b| format!("{b:02x}")).collect(),
        m: g.size(),
        leaves,
        tmc: result.value,
        waste: result.waste,
        predicates: predicates(g),
        witness: result.witness.to_file(),
    })
}

pub fn build_census(n: usize, options: &CensusOptions) -> Result<TmcCensus, HarnessError> {
    if n == 0 || n > CENSUS_LONG_ORDER {
        return Err(HarnessError::Order {
            n,
            max: CENSUS_LONG_ORDER,
        });
    }
    if n > CENSUS_MAX_ORDER && !options.allow_long {
        return Err(HarnessError::NeedsLong {
            n,
            cap: CENSUS_MAX_ORDER,
        });
    }
    if let Some(dir) = &options.cache_dir {
        if let Some(census) = cache::load(dir, n)? {
            return Ok(census);
        }
    }
    let graphs = enumerate_connected(n).map_err(|e| HarnessError::Order {
        n: e.0,
        max: CENSUS_LONG_ORDER,
    })?;
    let done = AtomicUsize::new(0);
    let total = graphs.len();
    let work = || {
        graphs
            .par_iter()
            .map(|g| {
                let rec = census_record(g);
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                if options.progress && (k.is_multiple_of(1000) || k == total) {
                    eprintln!("census n={n}: {k}/{total}");
                }
                rec
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let records = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?
            .install(work),
        None => work(),
    }?;
    let census = TmcCensus { n, records };
    if let Some(dir) = &options.cache_dir {
        cache::store(dir, &census)?;
    }
    Ok(census)
}

/// Least `m` such that every record with at least `m` edges has `tmc >= k`:
/// one more than the largest size with a record below `k`, or `n - 1` when
/// there is none.
pub fn empirical_f(census: &TmcCensus, k: usize) -> usize {
    census
        .records
        .iter()
        .filter(|r| r.tmc < k)
        .map(|r| r.m + 1)
        .max()
        .unwrap_or(census.n.saturating_sub(1))
}

/// Greatest `m` such that every record with at most `m` edges has `tmc <= k`,
/// or `None` below `k = n` where no such size exists.
pub fn empirical_g(census: &TmcCensus, k: usize) -> Option<usize> {
    if k < census.n {
        return None;
    }
    Some(
        census
            .records
            .iter()
            .filter(|r| r.tmc > k)
            .map(|r| r.m - 1)
            .min()
            .unwrap_or(choose2(census.n)),
    )
}
