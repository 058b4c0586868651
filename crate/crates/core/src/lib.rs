//! Exact solvers for the Max Induced C-Subgraph problem.
//!
//! Given a graph G and a hereditary target class C (edgeless, bounded
//! degree, forests, or bounded degeneracy), find a largest vertex set A
//! such that G[A] belongs to C. The crate provides three routes to the
//! answer and the machinery to cross-check them:
//!
//! * [`oracle`] — exhaustive enumeration, the ground truth at desk scale;
//! * [`dp`] — dynamic programming over a nice tree decomposition, with
//!   ordering-based states for degeneracy targets;
//! * [`branch`] — a subexponential driver that guesses the high-degree
//!   core of a solution, branches on high-degree vertices, and finishes
//!   with the DP on the flattened residual graph.
//!
//! [`graph`] holds the graph type, generators, I/O, and the edge
//! subdivision / line graph transformations; [`td`] builds, validates,
//! and normalizes tree decompositions.

pub mod branch;
pub mod class;
pub mod dp;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod td;

pub use class::TargetClass;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
