//! Exact computation of the heaviest cycle through each edge of a weighted
//! graph, the self-normalized sum `sum_e w(e) / C_w(e)` against its bound
//! `(n - 1) / 2`, and certificates for the cases where the bound is attained.
//!
//! All arithmetic is exact ([`Rational`]); searches are exhaustive and refuse
//! to run past their configured caps instead of approximating.

pub mod config;
pub mod cycles;
pub mod decomposition;
pub mod equality;
pub mod error;
pub mod format;
pub mod fuzz;
pub mod generators;
pub mod graph;
pub mod inequality;
pub mod rational;
pub mod report;

pub use config::SearchConfig;
pub use cycles::{CycleWitness, LocalProfile};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, VertexId, WeightedGraph};
pub use rational::Rational;
