//! Exhaustive census of connected graphs by order, and checks of the
//! extremal results against it.

mod cache;
mod census;
mod theorems;

pub use cache::{CACHE_DIR_ENV, CACHE_FORMAT, SOLVER_VERSION};
pub use census::{
    build_census, empirical_f, empirical_g, CensusOptions, CensusRecord, SizeAggregate, TmcCensus,
    CENSUS_LONG_ORDER, CENSUS_MAX_ORDER,
};
pub use theorems::{check_theorem, Counterexample, ReportRow, Theorem, TheoremReport};

use crate::solvers::SolverError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("order {n} needs the long-running flag (default cap {cap})")]
    NeedsLong { n: usize, cap: usize },
    #[error("order {n} outside the census range 1..={max}")]
    Order { n: usize, max: usize },
    #[error("{check} is not defined for n = {n}: {reason}")]
    Domain {
        check: &'static str,
        n: usize,
        reason: String,
    },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("cache {path}: {reason}")]
    Cache { path: String, reason: String },
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
