//! Exact computation of the total monochromatic connection number `tmc(G)`
//! for small connected graphs, with verified witness colorings, extremal
//! families, closed-form extremal functions and an exhaustive census.

pub mod coloring;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod solvers;
