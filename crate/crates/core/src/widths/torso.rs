//! Torsos, extended torsos and tightness of tree decompositions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{exact_treewidth, TreeDecomposition};

fn check_node(d: &TreeDecomposition, x: usize) -> Result<()> {
    if x < d.len() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "tree node {x} does not exist ({} nodes)",
            d.len()
        )))
    }
}

/// Union of the bags on `y`'s side of the tree edge `xy`.
pub fn side_vertices(d: &TreeDecomposition, x: usize, y: usize) -> VertexSet {
    let mut seen = vec![false; d.len()];
    seen[x] = true;
    seen[y] = true;
    let mut stack = vec![y];
    let mut out = Vec::new();
    while let Some(z) = stack.pop() {
        out.extend(d.bags[z].iter());
        for w in d.tree_neighbors(z) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    VertexSet::new(out)
}

/// Host edges plus, for each tree neighbour `y` of `x`, every pair inside
/// the adhesion β(x) ∩ β(y). Vertex set is all of V(G).
pub fn extended_torso(g: &Graph, d: &TreeDecomposition, x: usize) -> Result<Graph> {
    check_node(d, x)?;
    let mut edges = g.edges();
    for y in d.tree_neighbors(x) {
        let adhesion: Vec<usize> = d.bags[x].intersection(&d.bags[y]).into_vec();
        for (i, &u) in adhesion.iter().enumerate() {
            for &v in &adhesion[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_dedup(g.n(), &edges)
}

/// The torso at `x`, on the vertices of β(x) in ascending order; the map
/// sends torso ids to host ids.
pub fn torso(g: &Graph, d: &TreeDecomposition, x: usize) -> Result<(Graph, Vec<usize>)> {
    extended_torso(g, d, x)?.induced_subgraph(&d.bags[x])
}

/// A tree edge `(x, y)` for which no component on `y`'s side dominates the
/// adhesion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessFailure {
    pub x: usize,
    pub y: usize,
}

/// First component (by minimum vertex) of
/// `G[β(T_{y∖x}) ∖ β(T_{x∖y})]` in which every adhesion vertex has a
/// neighbour.
pub fn dominating_component(g: &Graph, d: &TreeDecomposition, x: usize, y: usize) -> Option<VertexSet> {
    let far = side_vertices(d, x, y).difference(&side_vertices(d, y, x));
    let adhesion = d.bags[x].intersection(&d.bags[y]);
    g.components_of(&far).into_iter().find(|c| {
        adhesion
            .iter()
            .all(|u| g.neighbors(u).iter().any(|&w| c.contains(w)))
    })
}

/// Checks tightness over ordered tree edges `(x, y)`, `x` ascending then
/// `y` ascending, returning the first failure.
pub fn is_tight(g: &Graph, d: &TreeDecomposition) -> std::result::Result<(), TightnessFailure> {
    for x in 0..d.len() {
        for y in d.tree_neighbors(x) {
            if dominating_component(g, d, x, y).is_none() {
                return Err(TightnessFailure { x, y });
            }
        }
    }
    Ok(())
}

/// Whether the treewidth of `g` equals the largest treewidth of a torso.
pub fn check_torso_max(g: &Graph, d: &TreeDecomposition) -> Result<bool> {
    d.validate(g)
        .map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    let (tw, _) = exact_treewidth(g)?;
    let mut best = 0;
    for x in 0..d.len() {
        let (t, _) = torso(g, d, x)?;
        best = best.max(exact_treewidth(&t)?.0);
    }
    Ok(tw == best)
}
