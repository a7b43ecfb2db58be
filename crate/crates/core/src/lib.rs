//! Randomly perturbed connected graphs `G* = G ∪ G(n, eps/n)`.
//!
//! The crate measures the quantities that govern such graphs (vertex and edge
//! expansion, conductance profiles, lazy-walk mixing times, diameter, long
//! paths) exactly at small scale and constructively at large scale, and runs
//! seeded parameter sweeps over them.

pub mod decomposition;
pub mod error;
pub mod expansion;
pub mod graph_core;
pub mod harness;
pub mod longpath;
pub mod rng;
pub mod subset_enum;
pub mod walks;

pub use error::{Error, ErrorKind, Result};
pub use graph_core::{BaseKind, Graph, PerturbationParams, PerturbedGraph};
