//! Maximum cliques and stable sets by branch and bound with a greedy
//! colouring bound.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for the clique and stable-set searches.
pub const CLIQUE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetWitness {
    pub size: usize,
    pub vertices: VertexSet,
}

pub fn clique_number(g: &Graph) -> Result<SetWitness> {
    clique_number_with_limit(g, CLIQUE_LIMIT)
}

pub fn max_stable_set(g: &Graph) -> Result<SetWitness> {
    max_stable_set_with_limit(g, CLIQUE_LIMIT)
}

/// Largest clique; `limit` may be raised up to 64.
pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<SetWitness> {
    size_limit("vertex count", g.n(), limit.min(64))?;
    let adj = g.adjacency_masks();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    Ok(max_clique_in(&adj, all))
}

pub fn max_stable_set_with_limit(g: &Graph, limit: usize) -> Result<SetWitness> {
    size_limit("vertex count", g.n(), limit.min(64))?;
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let co: Vec<u64> = g
        .adjacency_masks()
        .iter()
        .enumerate()
        .map(|(v, &m)| !m & all & !(1u64 << v))
        .collect();
    Ok(max_clique_in(&co, all))
}

/// Largest clique inside `cand` for the graph given by masks.
pub(crate) fn max_clique_in(adj: &[u64], cand: u64) -> SetWitness {
    let mut best = 0u64;
    expand(adj, 0, cand, &mut best);
    SetWitness {
        size: best.count_ones() as usize,
        vertices: VertexSet::from_mask(best),
    }
}

/// Whether the masks contain a clique of size `k` inside `cand`.
pub(crate) fn has_clique(adj: &[u64], cand: u64, k: usize) -> bool {
    fn go(adj: &[u64], cand: u64, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < k {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            if (rest.count_ones() as usize) < k {
                return false;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if go(adj, rest & adj[v], k - 1) {
                return true;
            }
        }
        false
    }
    go(adj, cand, k)
}

/// Greedy sequential colouring of `cand`; returns vertices in colour order
/// with the colour index of each.
fn colour_order(adj: &[u64], cand: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v) & !adj[v];
            uncoloured &= !(1u64 << v);
            out.push((v, colour));
        }
    }
    out
}

fn expand(adj: &[u64], current: u64, mut cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let order = colour_order(adj, cand);
    for &(v, colour) in order.iter().rev() {
        if current.count_ones() as usize + colour <= best.count_ones() as usize {
            return;
        }
        expand(adj, current | 1u64 << v, cand & adj[v], best);
        cand &= !(1u64 << v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}
