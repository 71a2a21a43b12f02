//! Exact `tmc` computation, exact leaf numbers, and the constructive lower
//! bounds used to seed the search.

mod bounds;
mod collection;
mod exact;
mod leaves;

pub use bounds::{
    complement_bound, lower_bound_complement, lower_bound_subgraph, lower_bound_theorem1,
    multipartite_collection, multipartite_coloring, theorem1_collection, ComplementBound,
    ComplementShape,
};
pub use collection::{Infeasible, TreeCollection};
pub use exact::{tmc_exact, Mode, TmcResult, SIMPLE_MAX_ORDER, UNRESTRICTED_MAX_ORDER};
pub use leaves::{djs_bound_holds, max_leaf_spanning_tree, SpanningTreeResult, LEAF_MAX_ORDER};

use crate::coloring::ColoringError;
use crate::graph::Edge;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {n} above the exact-mode cap of {cap}")]
    OrderCap { n: usize, cap: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("witness coloring fails at pair {0}")]
    WitnessRejected(Edge),
    #[error(transparent)]
    Infeasible(#[from] Infeasible),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
