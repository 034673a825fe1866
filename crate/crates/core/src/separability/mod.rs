//! Linkages, rigidity, blocks, seedlings and the digraph searches.

mod block;
mod digraph;
mod linkage;
mod seedling;

pub use block::{check_separable, disjoint_paths, find_block, Block, PairPaths, Separability, BLOCK_HOST_LIMIT};
pub use digraph::{
    digraph_fan_selection, digraph_stable_set, has_fan_property, Digraph, FanOutcome, StableSetOutcome, FAN_LIMIT,
};
pub use linkage::{check_rigidity, validate_linkage, Linkage, Rigidity, RIGIDITY_LIMIT};
pub use seedling::{find_seedling, neighborhood, seedling_or_block, validate_seedling, Dichotomy, Seedling, Verdict};
