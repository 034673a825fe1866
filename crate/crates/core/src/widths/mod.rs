//! Tree and path decompositions, exact width solvers and torsos.

mod pathwidth;
mod torso;
mod treewidth;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use pathwidth::{exact_pathwidth, exact_pathwidth_with_limit, ordering_separation, PATHWIDTH_LIMIT};
pub use torso::{check_torso_max, dominating_component, extended_torso, is_tight, side_vertices, torso, TightnessFailure};
pub use treewidth::{
    decomposition_from_elimination, elimination_width, exact_treewidth, exact_treewidth_with_limit, TREEWIDTH_LIMIT,
};

/// A tree decomposition: tree nodes are `0..bags.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionRepr", into = "DecompositionRepr")]
pub struct TreeDecomposition {
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: Vec<VertexSet>,
}

/// A path decomposition; consecutive bags are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionRepr", into = "DecompositionRepr")]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    tree_edges: Vec<[usize; 2]>,
    bags: BTreeMap<String, Vec<usize>>,
}

impl TryFrom<DecompositionRepr> for TreeDecomposition {
    type Error = Error;
    fn try_from(r: DecompositionRepr) -> Result<TreeDecomposition> {
        let mut indexed = BTreeMap::new();
        for (k, v) in r.bags {
            let x: usize = k
                .parse()
                .map_err(|_| Error::InvalidDecomposition(format!("bag key `{k}` is not a node index")))?;
            indexed.insert(x, VertexSet::new(v));
        }
        let count = indexed.len();
        if indexed.keys().copied().ne(0..count) {
            return Err(Error::InvalidDecomposition(
                "bag keys must be exactly 0..number of bags".into(),
            ));
        }
        let tree_edges: Vec<(usize, usize)> = r.tree_edges.iter().map(|e| (e[0], e[1])).collect();
        if let Some(&(x, y)) = tree_edges.iter().find(|&&(x, y)| x >= count || y >= count) {
            return Err(Error::InvalidDecomposition(format!(
                "tree edge {x}-{y} uses a node without a bag"
            )));
        }
        Ok(TreeDecomposition {
            tree_edges,
            bags: indexed.into_values().collect(),
        })
    }
}

impl From<TreeDecomposition> for DecompositionRepr {
    fn from(d: TreeDecomposition) -> DecompositionRepr {
        DecompositionRepr {
            tree_edges: d.tree_edges.iter().map(|&(x, y)| [x, y]).collect(),
            bags: d
                .bags
                .into_iter()
                .enumerate()
                .map(|(i, b)| (i.to_string(), b.into_vec()))
                .collect(),
        }
    }
}

impl TryFrom<DecompositionRepr> for PathDecomposition {
    type Error = Error;
    fn try_from(r: DecompositionRepr) -> Result<PathDecomposition> {
        let d = TreeDecomposition::try_from(r)?;
        let mut edges: Vec<(usize, usize)> =
            d.tree_edges.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        edges.sort_unstable();
        let expected: Vec<(usize, usize)> = (1..d.bags.len()).map(|i| (i - 1, i)).collect();
        if edges != expected {
            return Err(Error::InvalidDecomposition(
                "path decomposition nodes must form the path 0-1-…".into(),
            ));
        }
        Ok(PathDecomposition { bags: d.bags })
    }
}

impl From<PathDecomposition> for DecompositionRepr {
    fn from(p: PathDecomposition) -> DecompositionRepr {
        p.to_tree().into()
    }
}

/// The first decomposition axiom that fails, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "violation")]
pub enum Violation {
    NoNodes,
    NotATree { reason: String },
    BagVertexOutOfRange { node: usize, vertex: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    TraceDisconnected { vertex: usize, nodes: Vec<usize> },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NoNodes => write!(f, "decomposition has no nodes"),
            Violation::NotATree { reason } => write!(f, "tree is not a tree: {reason}"),
            Violation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains invalid vertex {vertex}")
            }
            Violation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::EdgeUncovered { u, v } => write!(f, "edge {u}-{v} is in no bag"),
            Violation::TraceDisconnected { vertex, nodes } => {
                write!(f, "bags containing {vertex} ({nodes:?}) are not connected in the tree")
            }
        }
    }
}

impl TreeDecomposition {
    /// The trivial one-bag decomposition.
    pub fn single_bag(g: &Graph) -> TreeDecomposition {
        TreeDecomposition {
            tree_edges: Vec::new(),
            bags: vec![VertexSet::new((0..g.n()).collect())],
        }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one (0 for an all-empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// The decomposition tree as a graph on the node ids.
    pub fn tree(&self) -> Result<Graph> {
        Graph::from_edges(self.bags.len(), &self.tree_edges)
    }

    /// Tree neighbours of node `x`, ascending.
    pub fn tree_neighbors(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .tree_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks the decomposition axioms against `g`, reporting the first
    /// failure in the order: tree shape, bag ids, vertex coverage, edge
    /// coverage, trace connectivity.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        let k = self.bags.len();
        if k == 0 {
            return Err(Violation::NoNodes);
        }
        let tree = Graph::from_edges(k, &self.tree_edges).map_err(|e| Violation::NotATree {
            reason: e.to_string(),
        })?;
        if tree.m() != k - 1 || !tree.is_connected() {
            return Err(Violation::NotATree {
                reason: format!("{k} nodes, {} edges, connected: {}", tree.m(), tree.is_connected()),
            });
        }
        for (x, bag) in self.bags.iter().enumerate() {
            if let Some(v) = bag.iter().find(|&v| v >= g.n()) {
                return Err(Violation::BagVertexOutOfRange { node: x, vertex: v });
            }
        }
        let mut trace = vec![Vec::new(); g.n()];
        for (x, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                trace[v].push(x);
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| trace[v].is_empty()) {
            return Err(Violation::VertexUncovered { vertex: v });
        }
        for (u, v) in g.edges() {
            if !trace[u].iter().any(|&x| self.bags[x].contains(v)) {
                return Err(Violation::EdgeUncovered { u, v });
            }
        }
        for (v, nodes) in trace.iter().enumerate() {
            let set = VertexSet::new(nodes.clone());
            if !tree.is_connected_set(&set) {
                return Err(Violation::TraceDisconnected {
                    vertex: v,
                    nodes: nodes.clone(),
                });
            }
        }
        Ok(())
    }
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn to_tree(&self) -> TreeDecomposition {
        TreeDecomposition {
            tree_edges: (1..self.bags.len()).map(|i| (i - 1, i)).collect(),
            bags: self.bags.clone(),
        }
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        self.to_tree().validate(g)
    }
}

/// Either kind of decomposition, for callers that accept both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Tree(TreeDecomposition),
    Path(PathDecomposition),
}

/// Validates either kind of decomposition.
pub fn validate_decomposition(g: &Graph, d: &Decomposition) -> std::result::Result<(), Violation> {
    match d {
        Decomposition::Tree(t) => t.validate(g),
        Decomposition::Path(p) => p.validate(g),
    }
}
