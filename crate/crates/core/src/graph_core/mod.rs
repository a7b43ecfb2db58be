//! Graph representation, base-graph generators, the `G(n, eps/n)` overlay and
//! elementary measurements.

pub mod corpus;
mod generators;
mod graph;
pub mod io;
mod measure;
mod perturb;

pub use generators::{complete, generate_base, grid, path, BaseKind, RANDOM_TREE_MAX_DEGREE};
pub use graph::{Graph, UNREACHED};
pub use measure::{degeneracy, diameter, double_sweep, eccentricities};
pub use perturb::{perturb, EdgeOrigin, PerturbationParams, PerturbedGraph};
