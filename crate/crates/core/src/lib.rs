//! Exact 2-limited broadcast domination on grid products, plus a
//! machine-checked case-analysis pipeline that certifies lower bounds
//! for the domination number of cylinder and torus grids.

pub mod bitset;
pub mod bounds;
pub mod grid;
pub mod solver;
pub mod window;

pub use grid::{Broadcast, FactorKind, Grid, GridError, Vertex, VertexSet};
pub use solver::{
    brute_force_gamma2, gamma2, has_broadcast, min_cost_cover, CoverInstance, CoverSolution,
    SolverCtx, SolverError,
};
