//! Exact pathwidth as the vertex separation number.
//!
//! For a prefix set `S` of an ordering, its cost is the number of vertices
//! of `S` with a neighbour outside `S`; the separation of an ordering is the
//! largest prefix cost. Up to 20 vertices a subset table over all prefixes
//! is filled; larger graphs (up to 128 vertices) use a depth-first decision
//! search over prefixes whose cost stays within a bound, with failed
//! prefixes memoised.

use std::collections::HashSet;

use crate::error::{size_limit, Result};
use crate::graph::{Graph, VertexSet};

use super::PathDecomposition;

/// Default vertex limit for [`exact_pathwidth`].
pub const PATHWIDTH_LIMIT: usize = 16;

const TABLE_MAX: usize = 20;
const SEARCH_MAX: usize = 128;

/// Pathwidth with the default size limit.
pub fn exact_pathwidth(g: &Graph) -> Result<(usize, PathDecomposition)> {
    exact_pathwidth_with_limit(g, PATHWIDTH_LIMIT)
}

/// Pathwidth and an optimal path decomposition, for graphs with at most
/// `limit` vertices (never more than 128).
///
/// Up to 20 vertices the ordering is the lexicographically smallest optimal
/// one. Beyond that the search first places vertices whose neighbours are
/// all placed, then tries the rest in ascending order.
pub fn exact_pathwidth_with_limit(g: &Graph, limit: usize) -> Result<(usize, PathDecomposition)> {
    size_limit("vertex count", g.n(), limit.min(SEARCH_MAX))?;
    let order = if g.n() <= TABLE_MAX {
        table_order(g)
    } else {
        search_order(g)
    };
    let pd = decomposition_from_order(g, &order);
    let width = pd.width();
    debug_assert_eq!(width, ordering_separation(g, &order));
    debug_assert_eq!(pd.validate(g), Ok(()));
    Ok((width, pd))
}

/// Largest prefix cost of `order`.
pub fn ordering_separation(g: &Graph, order: &[usize]) -> usize {
    let mut placed = vec![false; g.n()];
    let mut outside: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut boundary = 0usize;
    let mut best = 0;
    for &v in order {
        placed[v] = true;
        if outside[v] > 0 {
            boundary += 1;
        }
        for &w in g.neighbors(v) {
            outside[w] -= 1;
            if placed[w] && outside[w] == 0 {
                boundary -= 1;
            }
        }
        best = best.max(boundary);
    }
    best
}

/// Bag `i` is the vertex `order[i]` together with the earlier vertices that
/// still have a neighbour at position `i` or later.
fn decomposition_from_order(g: &Graph, order: &[usize]) -> PathDecomposition {
    let n = g.n();
    if n == 0 {
        return PathDecomposition {
            bags: vec![VertexSet::empty()],
        };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let last: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| pos[w]).max().unwrap_or(0).max(pos[v]))
        .collect();
    let bags = (0..n)
        .map(|i| {
            let mut bag: Vec<usize> = order[..i].iter().copied().filter(|&u| last[u] >= i).collect();
            bag.push(order[i]);
            VertexSet::new(bag)
        })
        .collect();
    PathDecomposition { bags }
}

fn table_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency_masks();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let cost = |s: u32| -> u8 {
        let mut c = 0;
        let mut rest = s;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[u] as u32 & !s != 0 {
                c += 1;
            }
        }
        c
    };
    // best[s]: smallest achievable maximum cost over the prefixes that
    // extend `s` to the full set, counting `s` itself.
    let mut best = vec![0u8; 1usize << n];
    for s in (0..full).rev() {
        let mut m = u8::MAX;
        let mut free = full & !s;
        while free != 0 {
            let v = free.trailing_zeros();
            free &= free - 1;
            m = m.min(best[(s | 1 << v) as usize]);
        }
        best[s as usize] = m.max(cost(s));
    }
    let opt = best[0];
    let mut order = Vec::with_capacity(n);
    let mut s = 0u32;
    while s != full {
        let v = (0..n as u32)
            .find(|&v| s & 1 << v == 0 && best[(s | 1 << v) as usize] <= opt)
            .expect("an optimal extension exists");
        order.push(v as usize);
        s |= 1 << v;
    }
    order
}

struct Search<'a> {
    adj: &'a [u128],
    n: usize,
    full: u128,
    bound: usize,
    failed: HashSet<u128>,
}

impl Search<'_> {
    fn cost(&self, s: u128) -> usize {
        let mut c = 0;
        let mut rest = s;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[u] & !s != 0 {
                c += 1;
            }
        }
        c
    }

    /// Adds vertices whose neighbours are all placed; this never raises
    /// the cost of any later prefix.
    fn close(&self, mut s: u128, order: &mut Vec<usize>) -> u128 {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                if s >> v & 1 == 0 && self.adj[v] & !s == 0 {
                    s |= 1 << v;
                    order.push(v);
                    changed = true;
                }
            }
            if !changed {
                return s;
            }
        }
    }

    fn run(&mut self, s: u128, order: &mut Vec<usize>) -> bool {
        let mark = order.len();
        let s = self.close(s, order);
        if s == self.full {
            return true;
        }
        if self.failed.contains(&s) {
            order.truncate(mark);
            return false;
        }
        for v in 0..self.n {
            if s >> v & 1 == 1 {
                continue;
            }
            let t = s | 1 << v;
            if self.cost(t) > self.bound {
                continue;
            }
            order.push(v);
            if self.run(t, order) {
                return true;
            }
            order.pop();
        }
        self.failed.insert(s);
        order.truncate(mark);
        false
    }
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
        .collect();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    for bound in 0..=n {
        let mut search = Search {
            adj: &adj,
            n,
            full,
            bound,
            failed: HashSet::new(),
        };
        let mut order = Vec::with_capacity(n);
        if search.run(0, &mut order) {
            return order;
        }
    }
    unreachable!("separation never exceeds n")
}
