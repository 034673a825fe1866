//! Exact width solvers, pattern detection, Ramsey-type tree extraction,
//! distance-bounded clustering, separability searches and bound arithmetic
//! for small graphs.

pub mod bounds;
pub mod clustering;
pub mod error;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod separability;
pub mod suite;
pub mod tree;
pub mod widths;

pub use error::{Error, Result};
pub use graph::{Graph, Subdivision, VertexSet};
pub use tree::RootedTree;
pub use widths::{PathDecomposition, TreeDecomposition};
