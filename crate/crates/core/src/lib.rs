//! Perfect matching coverings of cubic graphs.
//!
//! Exact enumeration of perfect matchings, the perfect matching index and its
//! odd variant, Fulkerson and Fan-Raspaud searches, constructive 4-coverings
//! from good pairs of odd cycles, snark generators and graph compositions.

pub mod compositions;
pub mod constructions;
pub mod coverings;
mod deadline;
mod edgeset;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod matchings;

pub use deadline::Deadline;
pub use edgeset::EdgeSet;
pub use graph::{CubicGraph, Cycle, GraphError, TwoFactor};
pub use matchings::{enumerate_perfect_matchings, PmCatalog};
