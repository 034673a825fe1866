//! Extraction of well-behaved regular subtrees from a rooted tree that sits
//! inside a host graph: monochromatic leaves, uniform ancestor adjacency,
//! induced root-to-leaf paths and anticomplete branches, and the pipeline
//! that chains them into an induced binary tree.

mod binary;
mod certify;
mod induced;
mod longpath;
mod planted;
mod uniform;

use serde::{Deserialize, Serialize};

use crate::patterns::MinorModel;
use crate::tree::RootedTree;

pub use binary::{recover_binary_tree, regular_tree_minor, BinaryTreeWitness, RegularTreeMinor};
pub use certify::{
    ancestor_pattern, is_branch_induced, is_path_induced, is_path_uniform, verify_long_path, CertificateError,
};
pub use induced::{branch_induced_extract, path_induced_extract};
pub use longpath::{long_path_dichotomy, LongPathOutcome};
pub use planted::{planted_host, PlantedHost, PlantedSpec};
pub use uniform::{color_uniform, path_uniform};

/// The property an extracted subtree is certified to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeProperty {
    Monochromatic,
    PathUniform,
    PathInduced,
    BranchInduced,
}

/// An extracted (δ,ρ)-regular subtree together with what it satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularSubtreeCertificate {
    pub parent: RootedTree,
    pub tree: RootedTree,
    pub delta: usize,
    pub rho: usize,
    pub property: TreeProperty,
    /// The shared leaf colour for monochromatic extractions.
    pub colour: Option<usize>,
}

/// Why an extraction stopped.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExtractionError {
    #[error(transparent)]
    Graph(#[from] crate::Error),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The host contains `K_{t,t}` as a subgraph on these two sides.
    #[error("host has a K_{{t,t}} subgraph with sides {left:?} and {right:?}")]
    CompleteBipartite { left: Vec<usize>, right: Vec<usize> },
    /// The host has a clique minor with these branch sets.
    #[error("host has a K_{} minor with branch sets {:?}", .model.branch_sets.len(), .model.branch_sets)]
    CliqueMinor { model: MinorModel },
    #[error("{stage} stage: {source}")]
    Stage {
        stage: &'static str,
        source: Box<ExtractionError>,
    },
}

pub type ExtractionResult<T> = std::result::Result<T, ExtractionError>;
