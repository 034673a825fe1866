//! Brute-force reference implementations. They share nothing with the
//! solvers beyond `Graph` itself and exist to cross-check them on small
//! inputs (tests and the `suite` runner use them).

use crate::graph::Graph;

/// Pathwidth as the minimum over all vertex orderings of the largest number
/// of placed vertices with an unplaced neighbour. Orderings are enumerated
/// depth-first with pruning against the best ordering found so far.
pub fn pathwidth_by_orderings(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    let mut placed = vec![false; n];
    let mut open: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    fn go(
        g: &Graph,
        placed: &mut [bool],
        open: &mut [usize],
        count: usize,
        sofar: usize,
        best: &mut usize,
    ) {
        if sofar >= *best {
            return;
        }
        if count == g.n() {
            *best = sofar;
            return;
        }
        for v in 0..g.n() {
            if placed[v] {
                continue;
            }
            placed[v] = true;
            for &w in g.neighbors(v) {
                open[w] -= 1;
            }
            let boundary = (0..g.n()).filter(|&u| placed[u] && open[u] > 0).count();
            go(g, placed, open, count + 1, sofar.max(boundary), best);
            for &w in g.neighbors(v) {
                open[w] += 1;
            }
            placed[v] = false;
        }
    }
    if n > 0 {
        go(g, &mut placed, &mut open, 0, 0, &mut best);
    }
    best
}

/// Treewidth as the minimum over all elimination orderings of the largest
/// degree at elimination time, simulating the fill-in explicitly.
pub fn treewidth_by_orderings(g: &Graph) -> usize {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut best = n.saturating_sub(1);
    fn go(adj: &[Vec<bool>], alive: &mut Vec<bool>, left: usize, sofar: usize, best: &mut usize) {
        if sofar >= *best {
            return;
        }
        if left == 0 {
            *best = sofar;
            return;
        }
        let n = adj.len();
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let nb: Vec<usize> = (0..n).filter(|&w| alive[w] && adj[v][w]).collect();
            let mut next = adj.to_vec();
            for &a in &nb {
                for &b in &nb {
                    if a != b {
                        next[a][b] = true;
                    }
                }
            }
            alive[v] = false;
            go(&next, alive, left - 1, sofar.max(nb.len()), best);
            alive[v] = true;
        }
    }
    if n > 0 {
        go(&adj, &mut vec![true; n], n, 0, &mut best);
    }
    best
}

/// Largest clique by trying every subset (n ≤ 20).
pub fn clique_number_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0;
    for s in 0u32..(1 << n) {
        let k = s.count_ones() as usize;
        if k <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
            best = k;
        }
    }
    best
}

/// Largest stable set by trying every subset (n ≤ 20).
pub fn stability_number_by_subsets(g: &Graph) -> usize {
    clique_number_by_subsets(&g.complement())
}

/// All-pairs distances by Floyd–Warshall; `usize::MAX` marks "unreachable".
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every induced path of `g` with ends `a` and `b` (`a != b`), as vertex
/// sequences starting at `a`.
pub fn induced_paths_between(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![a];
    fn extend(g: &Graph, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == b {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            // w may touch only `last` among the vertices already on the path.
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            extend(g, b, path, out);
            path.pop();
        }
    }
    extend(g, b, &mut path, &mut out);
    out
}

/// Largest number of induced `a`–`b` paths with pairwise disjoint
/// interiors, by exhaustive search over the path list.
pub fn max_internally_disjoint_induced_paths(g: &Graph, a: usize, b: usize) -> usize {
    let paths: Vec<u64> = induced_paths_between(g, a, b)
        .into_iter()
        .map(|p| p[1..p.len() - 1].iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    fn best(paths: &[u64], i: usize, used: u64, direct_used: bool) -> usize {
        if i == paths.len() {
            return 0;
        }
        let skip = best(paths, i + 1, used, direct_used);
        let p = paths[i];
        let ok = if p == 0 { !direct_used } else { p & used == 0 };
        if ok {
            skip.max(1 + best(paths, i + 1, used | p, direct_used || p == 0))
        } else {
            skip
        }
    }
    best(&paths, 0, 0, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, grid};

    #[test]
    fn known_values() {
        assert_eq!(pathwidth_by_orderings(&complete(4).unwrap()), 3);
        assert_eq!(treewidth_by_orderings(&cycle(5).unwrap()), 2);
        assert_eq!(treewidth_by_orderings(&grid(3).unwrap()), 3);
        assert_eq!(pathwidth_by_orderings(&grid(3).unwrap()), 3);
        assert_eq!(clique_number_by_subsets(&cycle(5).unwrap()), 2);
        assert_eq!(stability_number_by_subsets(&cycle(5).unwrap()), 2);
    }

    #[test]
    fn induced_paths_in_cycle() {
        let c = cycle(6).unwrap();
        let p = induced_paths_between(&c, 0, 3);
        assert_eq!(p.len(), 2);
        assert_eq!(max_internally_disjoint_induced_paths(&c, 0, 3), 2);
        let k4 = complete(4).unwrap();
        // Only the direct edge is induced.
        assert_eq!(induced_paths_between(&k4, 0, 1), vec![vec![0, 1]]);
    }
}
