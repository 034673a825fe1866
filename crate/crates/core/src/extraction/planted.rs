//! Host graphs built around a regular rooted tree with planted extra
//! edges, for exercising the extractors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::regular_rooted_tree;
use crate::graph::Graph;
use crate::tree::RootedTree;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedSpec {
    pub width: usize,
    pub depth: usize,
    /// Level pairs `(a, b)`, `a + 2 <= b`: every vertex at depth `b` is
    /// joined to its ancestor at depth `a`.
    #[serde(default)]
    pub chord_levels: Vec<(usize, usize)>,
    /// Join a random half of the leaves to their grandparent.
    #[serde(default)]
    pub leaf_chords: bool,
    /// Number of edges added between the subtrees of the first two
    /// children of a random vertex.
    #[serde(default)]
    pub cross_edges: usize,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedHost {
    pub graph: Graph,
    pub tree: RootedTree,
}

pub fn planted_host(spec: &PlantedSpec) -> Result<PlantedHost> {
    let tree = regular_rooted_tree(spec.width, spec.depth)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = tree.to_graph().edges();
    for &(a, b) in &spec.chord_levels {
        if a + 2 > b || b > spec.depth {
            return Err(Error::InvalidParameter(format!("chord levels ({a}, {b}) out of range")));
        }
        for v in tree.level(b) {
            edges.push((tree.ancestor(v, b - a).expect("depth b"), v));
        }
    }
    if spec.leaf_chords && spec.depth >= 2 {
        for v in tree.level(spec.depth) {
            if rng.gen_bool(0.5) {
                edges.push((tree.ancestor(v, 2).expect("depth >= 2"), v));
            }
        }
    }
    if spec.cross_edges > 0 {
        if spec.width < 2 || spec.depth == 0 {
            return Err(Error::InvalidParameter("cross edges need width >= 2 and depth >= 1".into()));
        }
        let inner: Vec<usize> = (0..spec.depth).flat_map(|d| tree.level(d)).collect();
        for _ in 0..spec.cross_edges {
            let v = inner[rng.gen_range(0..inner.len())];
            let left = tree.subtree(tree.children(v)[0]);
            let right = tree.subtree(tree.children(v)[1]);
            edges.push((left[rng.gen_range(0..left.len())], right[rng.gen_range(0..right.len())]));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let graph = Graph::from_edges_dedup(tree.n_ids(), &edges)?;
    Ok(PlantedHost { graph, tree })
}
