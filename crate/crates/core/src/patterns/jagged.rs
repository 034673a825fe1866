//! Jaggedness: every induced subgraph of pathwidth at least 3 must have
//! at least `zeta` vertices of degree two (degree taken in the subgraph).

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Result};
use crate::graph::{mask_iter, Graph, VertexSet};
use crate::widths::exact_pathwidth;

/// Largest host for [`check_jagged`].
pub const JAGGED_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JaggedFailure {
    /// Vertex set of the offending induced subgraph.
    pub vertices: VertexSet,
    pub pathwidth: usize,
    pub degree_two: usize,
}

/// `Ok(None)` if `g` is `zeta`-jagged; otherwise a failing induced subgraph,
/// chosen smallest first and then by smallest vertex mask.
pub fn check_jagged(g: &Graph, zeta: usize) -> Result<Option<JaggedFailure>> {
    size_limit("vertex count", g.n(), JAGGED_LIMIT)?;
    let n = g.n();
    // Pathwidth never grows under taking induced subgraphs.
    if exact_pathwidth(g)?.0 < 3 {
        return Ok(None);
    }
    let adj = g.adjacency_masks();
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for s in masks {
        // Pathwidth 3 needs at least four vertices.
        if s.count_ones() < 4 {
            continue;
        }
        let degree_two = mask_iter(s).filter(|&v| (adj[v] & s).count_ones() == 2).count();
        if degree_two >= zeta {
            continue;
        }
        let vertices = VertexSet::from_mask(s);
        let (h, _) = g.induced_subgraph(&vertices)?;
        let (pathwidth, _) = exact_pathwidth(&h)?;
        if pathwidth >= 3 {
            return Ok(Some(JaggedFailure {
                vertices,
                pathwidth,
                degree_two,
            }));
        }
    }
    Ok(None)
}
