//! Recovery of an induced binary tree, and regular trees as minors of
//! binary trees.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::generators::binary_tree;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{detect_pattern_with, DetectLimits, MinorModel, Relation, Witness};
use crate::tree::RootedTree;

use super::induced::{branch_induced_extract, path_induced_extract};
use super::{ExtractionError, ExtractionResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryTreeWitness {
    pub tree: RootedTree,
    /// `map[b]` is the host vertex playing binary-tree vertex `b`
    /// (children of `b` are `2b+1` and `2b+2`).
    pub map: Vec<usize>,
}

/// Path-induced extraction with branching `delta`, then branch-induced
/// extraction with branching 2; the result is checked to be an induced
/// binary tree of radius `rho` in `g`.
pub fn recover_binary_tree(
    g: &Graph,
    t: &RootedTree,
    delta: usize,
    rho: usize,
    tau: usize,
) -> ExtractionResult<BinaryTreeWitness> {
    let stage = |stage: &'static str| {
        move |e| ExtractionError::Stage {
            stage,
            source: Box::new(e),
        }
    };
    let induced = path_induced_extract(g, t, delta, rho, tau).map_err(stage("path-induced"))?;
    let branched = branch_induced_extract(g, &induced.tree, 2, tau).map_err(stage("branch-induced"))?;
    let tree = branched.tree;
    let mut map = vec![tree.root()];
    let mut i = 0;
    while i < map.len() {
        map.extend_from_slice(tree.children(map[i]));
        i += 1;
    }
    let pattern = binary_tree(rho)?;
    let witness = Witness::Embedding { map: map.clone() };
    witness
        .validate(g, &pattern, Relation::InducedSubgraph)
        .map_err(|e| stage("verify")(Error::Internal(format!("not an induced binary tree: {e}")).into()))?;
    Ok(BinaryTreeWitness { tree, map })
}

/// A (2^δ,ρ)-regular rooted tree together with a minor model of it in the
/// host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularTreeMinor {
    /// The regular tree on its own ids `0..k`.
    pub tree: RootedTree,
    pub model: MinorModel,
}

/// Finds a minor model of the binary tree of radius δρ in `g` and
/// contracts every block of δ consecutive levels into its top vertex,
/// which leaves each remaining vertex with 2^δ children. `None` when the
/// binary tree is not a minor of `g`. Desk scale only: δρ ≤ 3.
pub fn regular_tree_minor(g: &Graph, delta: usize, rho: usize) -> ExtractionResult<Option<RegularTreeMinor>> {
    if delta == 0 || delta * rho > 3 {
        return Err(ExtractionError::Precondition("need delta >= 1 and delta*rho <= 3".into()));
    }
    let b = binary_tree(delta * rho)?;
    let limits = DetectLimits {
        max_pattern: b.n(),
        max_host: 128,
        ..DetectLimits::default()
    };
    let Some(Witness::Model(model)) = detect_pattern_with(g, &b, Relation::Minor, &limits)? else {
        return Ok(None);
    };
    let depth = |v: usize| (usize::BITS - (v + 1).leading_zeros() - 1) as usize;
    let up = |v: usize, k: usize| (0..k).fold(v, |x, _| (x - 1) / 2);
    // Kept binary vertices, at depths divisible by δ, get ids in order.
    let kept: Vec<usize> = (0..b.n()).filter(|&v| depth(v) % delta == 0).collect();
    let id = |v: usize| kept.binary_search(&v).expect("kept vertex");
    let mut sets = vec![Vec::new(); kept.len()];
    for v in 0..b.n() {
        let top = up(v, depth(v) % delta);
        sets[id(top)].extend(model.branch_sets[v].iter());
    }
    let pairs: Vec<(usize, usize)> = kept
        .iter()
        .filter(|&&v| v != 0)
        .map(|&v| (id(v), id(up(v, delta))))
        .collect();
    let tree = RootedTree::from_parents(kept.len(), 0, &pairs)?;
    let contracted = MinorModel {
        branch_sets: sets.into_iter().map(VertexSet::new).collect(),
        induced: false,
    };
    contracted
        .validate(g, &tree.to_graph())
        .map_err(|e| Error::Internal(format!("contracted model invalid: {e}")))?;
    Ok(Some(RegularTreeMinor { tree, model: contracted }))
}
