//! Exact treewidth by a subset table over elimination prefixes.
//!
//! Eliminating `v` after the set `S` costs the number of vertices outside
//! `S ∪ {v}` reachable from `v` through `S`; the treewidth is the least
//! possible maximum cost over all elimination orderings.

use crate::error::{size_limit, Result};
use crate::graph::{mask_iter, Graph, VertexSet};

use super::TreeDecomposition;

/// Default vertex limit for [`exact_treewidth`].
pub const TREEWIDTH_LIMIT: usize = 14;

const TABLE_MAX: usize = 22;

pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth_with_limit(g, TREEWIDTH_LIMIT)
}

/// Treewidth and an optimal tree decomposition built from the
/// lexicographically smallest optimal elimination ordering.
pub fn exact_treewidth_with_limit(g: &Graph, limit: usize) -> Result<(usize, TreeDecomposition)> {
    size_limit("vertex count", g.n(), limit.min(TABLE_MAX))?;
    let order = table_order(g);
    let td = decomposition_from_elimination(g, &order);
    debug_assert_eq!(td.validate(g), Ok(()));
    debug_assert_eq!(td.width(), elimination_width(g, &order));
    Ok((td.width(), td))
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn reach(adj: &[u64], s: u64, v: usize) -> u64 {
    let mut comp = 1u64 << v;
    let mut frontier = comp;
    let mut nb = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        for u in mask_iter(frontier) {
            nb |= adj[u];
        }
        next |= nb & s & !comp;
        comp |= next;
        frontier = next;
    }
    nb & !s & !(1u64 << v)
}

/// Maximum elimination cost of `order` (0 for the empty graph).
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let adj = g.adjacency_masks();
    let mut s = 0u64;
    let mut best = 0;
    for &v in order {
        best = best.max(reach(&adj, s, v).count_ones() as usize);
        s |= 1 << v;
    }
    best
}

fn table_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency_masks();
    let full: u64 = (1u64 << n) - 1;
    // best[s]: least achievable maximum cost of eliminating the rest after s.
    let mut best = vec![0u8; 1usize << n];
    for s in (0..full).rev() {
        let mut m = u8::MAX;
        for v in mask_iter(full & !s) {
            let c = (reach(&adj, s, v).count_ones() as u8).max(best[(s | 1 << v) as usize]);
            m = m.min(c);
        }
        best[s as usize] = m;
    }
    let opt = best[0];
    let mut order = Vec::with_capacity(n);
    let mut s = 0u64;
    while s != full {
        let v = (0..n)
            .find(|&v| {
                s >> v & 1 == 0
                    && reach(&adj, s, v).count_ones() as u8 <= opt
                    && best[(s | 1 << v) as usize] <= opt
            })
            .expect("an optimal extension exists");
        order.push(v);
        s |= 1 << v;
    }
    order
}

/// Node `i` holds `order[i]` and its reach at elimination time; its parent
/// is the node of the earliest-eliminated vertex of that reach. Roots of
/// different components are chained together.
pub fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            tree_edges: Vec::new(),
            bags: vec![VertexSet::empty()],
        };
    }
    let adj = g.adjacency_masks();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut s = 0u64;
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let r = reach(&adj, s, v);
        bags.push(VertexSet::from_mask(r | 1 << v));
        match mask_iter(r).map(|u| pos[u]).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
        s |= 1 << v;
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition {
        tree_edges: edges,
        bags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, grid};

    #[test]
    fn small_families() {
        assert_eq!(exact_treewidth(&complete(5).unwrap()).unwrap().0, 4);
        assert_eq!(exact_treewidth(&complete_bipartite(3, 3).unwrap()).unwrap().0, 3);
        assert_eq!(exact_treewidth(&cycle(5).unwrap()).unwrap().0, 2);
        assert_eq!(exact_treewidth(&grid(3).unwrap()).unwrap().0, 3);
        assert_eq!(exact_treewidth(&Graph::empty(4)).unwrap().0, 0);
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(exact_treewidth(&tree).unwrap().0, 1);
    }

    #[test]
    fn disconnected_graphs_yield_one_tree() {
        let g = complete(3).unwrap().disjoint_union(&cycle(4).unwrap());
        let (w, td) = exact_treewidth(&g).unwrap();
        assert_eq!(w, 2);
        assert_eq!(td.validate(&g), Ok(()));
    }

    #[test]
    fn limit_is_enforced() {
        assert!(exact_treewidth(&cycle(15).unwrap()).is_err());
    }
}
