//! Middle graphs and their (total) domination numbers.
//!
//! * [`graph`]: labeled undirected graphs and elementary queries
//! * [`families`]: named families and small-graph enumerators
//! * [`operators`]: middle graph, line graph, corona, 2-corona, join
//! * [`solver`]: exact `γ` and `γ_t` by branch and bound
//! * [`formulas`]: closed forms for `γ_t(M(G))` and explicit witnesses
//! * [`harness`]: file format, verification campaigns, Nordhaus–Gaddum scan, CLI

pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod operators;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, VertexLabel, VertexSet};
pub use operators::MiddleGraph;
