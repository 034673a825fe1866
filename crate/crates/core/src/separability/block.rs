//! (κ,λ)-blocks: vertex sets whose pairs are joined by many internally
//! disjoint paths, and the searches for them.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::induced_paths_between;

/// Largest host for the block searches.
pub const BLOCK_HOST_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPaths {
    pub pair: (usize, usize),
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    /// One entry per pair `x < y` of `vertices`, in lexicographic order.
    pub pairs: Vec<PairPaths>,
    pub stable: bool,
    pub strong: bool,
}

fn is_path(g: &Graph, seq: &[usize]) -> bool {
    !seq.is_empty()
        && seq.iter().all(|&v| v < g.n())
        && VertexSet::from(seq).len() == seq.len()
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

impl Block {
    /// Checks the block axioms for (κ,λ) and the claimed flags.
    pub fn validate(&self, g: &Graph, kappa: usize, lambda: usize) -> std::result::Result<(), String> {
        let b = VertexSet::from(&self.vertices[..]);
        if b.len() != self.vertices.len() || b.len() < kappa {
            return Err(format!("need at least {kappa} distinct vertices"));
        }
        if b.iter().any(|v| v >= g.n()) {
            return Err("vertex outside the host".into());
        }
        let expected: Vec<(usize, usize)> = b
            .iter()
            .flat_map(|x| b.iter().filter(move |&y| y > x).map(move |y| (x, y)))
            .collect();
        let found: Vec<(usize, usize)> = self.pairs.iter().map(|p| p.pair).collect();
        if expected != found {
            return Err(format!("pairs {found:?} do not list the 2-subsets {expected:?}"));
        }
        for pp in &self.pairs {
            let (x, y) = pp.pair;
            if pp.paths.len() < lambda {
                return Err(format!("pair {x}-{y} has {} paths, need {lambda}", pp.paths.len()));
            }
            for p in &pp.paths {
                if !is_path(g, p) || p[0] != x || p[p.len() - 1] != y {
                    return Err(format!("{p:?} is not a path from {x} to {y}"));
                }
            }
            for (i, p) in pp.paths.iter().enumerate() {
                for q in &pp.paths[i + 1..] {
                    if p.len() == 2 && q.len() == 2 {
                        return Err(format!("pair {x}-{y} uses its edge twice"));
                    }
                    let (pi, qi) = (interior(p), interior(q));
                    if !pi.is_disjoint(&qi) {
                        return Err(format!("paths for {x}-{y} share an interior vertex"));
                    }
                }
            }
        }
        if self.stable && self.vertices.iter().any(|&x| self.vertices.iter().any(|&y| g.has_edge(x, y))) {
            return Err("claimed stable, but two block vertices are adjacent".into());
        }
        if self.strong {
            for (i, a) in self.pairs.iter().enumerate() {
                for c in &self.pairs[i + 1..] {
                    let va: VertexSet = a.paths.iter().flatten().copied().collect();
                    let vc: VertexSet = c.paths.iter().flatten().copied().collect();
                    let ends = VertexSet::from(vec![a.pair.0, a.pair.1]).intersection(&VertexSet::from(vec![c.pair.0, c.pair.1]));
                    if va.intersection(&vc) != ends {
                        return Err(format!("path systems of {:?} and {:?} meet outside shared ends", a.pair, c.pair));
                    }
                }
            }
        }
        Ok(())
    }
}

fn interior(p: &[usize]) -> VertexSet {
    if p.len() <= 2 {
        VertexSet::empty()
    } else {
        VertexSet::from(&p[1..p.len() - 1])
    }
}

/// The largest number of internally disjoint `x`–`y` paths avoiding
/// `blocked`, by augmenting paths on the vertex-split network (Menger),
/// each path shortcut inside its own vertex set. The paths are induced
/// when `x` and `y` are nonadjacent.
pub fn disjoint_paths(g: &Graph, x: usize, y: usize, blocked: &VertexSet) -> Vec<Vec<usize>> {
    let n = g.n();
    // Node 2v is v's entry, 2v+1 its exit.
    let mut cap = std::collections::HashMap::<(usize, usize), i32>::new();
    let mut adj = vec![Vec::new(); 2 * n];
    let mut add = |cap: &mut std::collections::HashMap<(usize, usize), i32>, a: usize, b: usize, c: i32| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        adj[a].push(b);
        adj[b].push(a);
    };
    let big = n as i32 + 1;
    for v in 0..n {
        if blocked.contains(v) && v != x && v != y {
            continue;
        }
        add(&mut cap, 2 * v, 2 * v + 1, if v == x || v == y { big } else { 1 });
    }
    for (u, v) in g.edges() {
        if (blocked.contains(u) && u != x && u != y) || (blocked.contains(v) && v != x && v != y) {
            continue;
        }
        add(&mut cap, 2 * u + 1, 2 * v, 1);
        add(&mut cap, 2 * v + 1, 2 * u, 1);
    }
    let (s, t) = (2 * x + 1, 2 * y);
    loop {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if prev[b] == usize::MAX && cap[&(a, b)] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[t] == usize::MAX {
            break;
        }
        let mut b = t;
        while b != s {
            let a = prev[b];
            *cap.get_mut(&(a, b)).unwrap() -= 1;
            *cap.get_mut(&(b, a)).unwrap() += 1;
            b = a;
        }
    }
    // Each arc u_out -> v_in had capacity 1; what is used is its flow.
    let mut flow = std::collections::HashMap::<(usize, usize), i32>::new();
    for (u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if let Some(&c) = cap.get(&(2 * a + 1, 2 * b)) {
                if c < 1 {
                    flow.insert((a, b), 1 - c);
                }
            }
        }
    }
    // Cancel opposite flows on the same edge.
    for (u, v) in g.edges() {
        let f = flow.get(&(u, v)).copied().unwrap_or(0);
        let r = flow.get(&(v, u)).copied().unwrap_or(0);
        let m = f.min(r);
        if m > 0 {
            *flow.get_mut(&(u, v)).unwrap() -= m;
            *flow.get_mut(&(v, u)).unwrap() -= m;
        }
    }
    let mut out = Vec::new();
    loop {
        let mut path = vec![x];
        let mut cur = x;
        let mut seen = vec![false; n];
        seen[x] = true;
        while cur != y {
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| flow.get(&(cur, w)).copied().unwrap_or(0) > 0 && (!seen[w] || w == y));
            let Some(w) = next else { break };
            *flow.get_mut(&(cur, w)).unwrap() -= 1;
            seen[w] = true;
            path.push(w);
            cur = w;
        }
        if cur != y {
            break;
        }
        out.push(shortcut(g, &path));
    }
    out
}

/// Shortest `x`–`y` path inside the vertices of `path`, never using the
/// edge `xy` unless `path` is that edge. Induced when `x`, `y` are
/// nonadjacent.
fn shortcut(g: &Graph, path: &[usize]) -> Vec<usize> {
    let (x, y) = (path[0], path[path.len() - 1]);
    if path.len() == 2 {
        return path.to_vec();
    }
    let within = VertexSet::from(path);
    let mut prev = vec![usize::MAX; g.n()];
    prev[y] = y;
    let mut queue = std::collections::VecDeque::from([y]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if within.contains(b) && prev[b] == usize::MAX && !(a == y && b == x) {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    let mut out = vec![x];
    let mut cur = x;
    while cur != y {
        cur = prev[cur];
        out.push(cur);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// First (κ,λ)-block on exactly κ vertices, κ-subsets tried in
/// lexicographic order. A block on more vertices restricts to one on any
/// κ of them, so nothing is lost. Paths are returned induced.
pub fn find_block(g: &Graph, kappa: usize, lambda: usize, require_stable: bool, require_strong: bool) -> Result<Option<Block>> {
    size_limit("host vertex count", g.n(), BLOCK_HOST_LIMIT)?;
    size_limit("κ", kappa, 3)?;
    size_limit("λ", lambda, 3)?;
    if kappa == 0 || lambda == 0 {
        return Err(Error::InvalidParameter("κ and λ must be positive".into()));
    }
    for b in subsets(g.n(), kappa) {
        if require_stable && b.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y))) {
            continue;
        }
        let pairs: Vec<(usize, usize)> = b
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| b[i + 1..].iter().map(move |&y| (x, y)))
            .collect();
        let found = if require_strong {
            strong_systems(g, &b, &pairs, lambda)
        } else {
            pairs
                .iter()
                .map(|&(x, y)| {
                    let mut ps = disjoint_paths(g, x, y, &VertexSet::empty());
                    ps.truncate(lambda);
                    (ps.len() == lambda).then_some(ps)
                })
                .collect::<Option<Vec<_>>>()
        };
        if let Some(systems) = found {
            let stable = !b.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y)));
            let mut block = Block {
                vertices: b,
                pairs: pairs
                    .into_iter()
                    .zip(systems)
                    .map(|(pair, paths)| PairPaths { pair, paths })
                    .collect(),
                stable,
                strong: false,
            };
            block.strong = require_strong || block_is_strong(&block);
            debug_assert_eq!(block.validate(g, kappa, lambda), Ok(()));
            return Ok(Some(block));
        }
    }
    Ok(None)
}

fn block_is_strong(b: &Block) -> bool {
    b.pairs.iter().enumerate().all(|(i, a)| {
        b.pairs[i + 1..].iter().all(|c| {
            let va: VertexSet = a.paths.iter().flatten().copied().collect();
            let vc: VertexSet = c.paths.iter().flatten().copied().collect();
            let ends = VertexSet::from(vec![a.pair.0, a.pair.1]).intersection(&VertexSet::from(vec![c.pair.0, c.pair.1]));
            va.intersection(&vc) == ends
        })
    })
}

/// Path systems for all pairs with interiors pairwise disjoint and
/// avoiding the block, searched pair by pair over induced paths, with a
/// Menger bound on the pairs still open.
fn strong_systems(g: &Graph, b: &[usize], pairs: &[(usize, usize)], lambda: usize) -> Option<Vec<Vec<Vec<usize>>>> {
    let bset = VertexSet::from(b);
    if pairs.len() == 1 {
        let (x, y) = pairs[0];
        let mut ps = disjoint_paths(g, x, y, &VertexSet::empty());
        ps.truncate(lambda);
        return (ps.len() == lambda).then(|| vec![ps]);
    }
    let candidates: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(x, y)| {
            if !g.has_edge(x, y) {
                return induced_paths_between(g, x, y)
                    .into_iter()
                    .filter(|p| interior(p).is_disjoint(&bset))
                    .collect();
            }
            // Any other path shortcuts to an induced path of G - xy.
            let without: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (x.min(y), x.max(y))).collect();
            let h = Graph::from_edges(g.n(), &without).expect("subgraph of a graph");
            let mut ps: Vec<Vec<usize>> = vec![vec![x, y]];
            ps.extend(
                induced_paths_between(&h, x, y)
                    .into_iter()
                    .filter(|p| interior(p).is_disjoint(&bset)),
            );
            ps
        })
        .collect();
    let mut chosen: Vec<Vec<Vec<usize>>> = Vec::new();
    fn feasible(g: &Graph, pairs: &[(usize, usize)], from: usize, used: &VertexSet, b: &VertexSet, lambda: usize) -> bool {
        pairs[from..].iter().all(|&(x, y)| {
            let blocked = used.union(&b.difference(&VertexSet::from(vec![x, y])));
            disjoint_paths(g, x, y, &blocked).len() >= lambda
        })
    }
    fn go(
        g: &Graph,
        pairs: &[(usize, usize)],
        candidates: &[Vec<Vec<usize>>],
        b: &VertexSet,
        lambda: usize,
        used: &VertexSet,
        chosen: &mut Vec<Vec<Vec<usize>>>,
    ) -> bool {
        let p = chosen.len();
        if p == pairs.len() {
            return true;
        }
        if !feasible(g, pairs, p, used, b, lambda) {
            return false;
        }
        let options: Vec<&Vec<usize>> = candidates[p].iter().filter(|c| interior(c).is_disjoint(used)).collect();
        let mut pick: Vec<usize> = Vec::new();
        fn choose(
            g: &Graph,
            pairs: &[(usize, usize)],
            candidates: &[Vec<Vec<usize>>],
            b: &VertexSet,
            lambda: usize,
            used: &VertexSet,
            options: &[&Vec<usize>],
            start: usize,
            pick: &mut Vec<usize>,
            chosen: &mut Vec<Vec<Vec<usize>>>,
        ) -> bool {
            if pick.len() == lambda {
                let mut now = used.clone();
                for &i in pick.iter() {
                    now = now.union(&interior(options[i]));
                }
                chosen.push(pick.iter().map(|&i| options[i].clone()).collect());
                if go(g, pairs, candidates, b, lambda, &now, chosen) {
                    return true;
                }
                chosen.pop();
                return false;
            }
            for i in start..options.len() {
                let ii = interior(options[i]);
                let ok = pick.iter().all(|&j| {
                    let jj = interior(options[j]);
                    ii.is_disjoint(&jj) && !(ii.is_empty() && jj.is_empty())
                });
                if ok {
                    pick.push(i);
                    if choose(g, pairs, candidates, b, lambda, used, options, i + 1, pick, chosen) {
                        return true;
                    }
                    pick.pop();
                }
            }
            false
        }
        choose(g, pairs, candidates, b, lambda, used, &options, 0, &mut pick, chosen)
    }
    go(g, pairs, &candidates, &bset, lambda, &VertexSet::empty(), &mut chosen).then_some(chosen)
}

/// Result of [`check_separable`]: separable exactly when no stable strong
/// block exists; otherwise the first block found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separability {
    pub separable: bool,
    pub witness: Option<Block>,
}

pub fn check_separable(g: &Graph, kappa: usize, lambda: usize) -> Result<Separability> {
    let witness = find_block(g, kappa, lambda, true, true)?;
    Ok(Separability {
        separable: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, random_graph};
    use crate::oracle::max_internally_disjoint_induced_paths;

    /// Two vertices joined by three paths of length 2.
    fn theta() -> Graph {
        Graph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn theta_graph_is_not_separable() {
        let g = theta();
        let s = check_separable(&g, 2, 3).unwrap();
        assert!(!s.separable);
        assert_eq!(s.witness.unwrap().validate(&g, 2, 3), Ok(()));
        assert!(matches!(check_separable(&g, 2, 4), Err(Error::SizeLimit { .. })));
        let two = Graph::from_edges(4, &[(0, 2), (2, 1), (0, 3), (3, 1)]).unwrap();
        assert!(check_separable(&two, 2, 3).unwrap().separable);
    }

    #[test]
    fn cliques_and_trees() {
        for lambda in 1..=3 {
            assert!(check_separable(&complete(5).unwrap(), 2, lambda).unwrap().separable);
        }
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(check_separable(&tree, 2, 2).unwrap().separable);
        assert!(!check_separable(&tree, 2, 1).unwrap().separable);
    }

    #[test]
    fn menger_counts_match_oracle() {
        for seed in 0..60 {
            let g = random_graph(8, 1, 3, seed).unwrap();
            for x in 0..8 {
                for y in x + 1..8 {
                    if g.has_edge(x, y) {
                        continue;
                    }
                    let ps = disjoint_paths(&g, x, y, &VertexSet::empty());
                    assert_eq!(ps.len(), max_internally_disjoint_induced_paths(&g, x, y));
                    let b = Block {
                        vertices: vec![x, y],
                        pairs: vec![PairPaths { pair: (x, y), paths: ps.clone() }],
                        stable: true,
                        strong: true,
                    };
                    assert_eq!(b.validate(&g, 2, ps.len()), Ok(()));
                }
            }
        }
    }

    #[test]
    fn strong_triple_in_subdivided_triangle() {
        // Each pair of 0, 1, 2 joined through its own middle vertex, twice.
        let mut edges = Vec::new();
        let mut next = 3;
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            for _ in 0..2 {
                edges.push((x, next));
                edges.push((next, y));
                next += 1;
            }
        }
        let g = Graph::from_edges(next, &edges).unwrap();
        let b = find_block(&g, 3, 2, true, true).unwrap().unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2]);
        assert_eq!(b.validate(&g, 3, 2), Ok(()));
        assert!(find_block(&g, 3, 3, true, true).unwrap().is_none());
        // C6 has a stable 3-set with one path per pair but no strong 2.
        let c6 = cycle(6).unwrap();
        assert!(find_block(&c6, 3, 1, true, true).unwrap().is_some());
        assert!(find_block(&c6, 3, 2, true, true).unwrap().is_none());
        assert!(find_block(&c6, 3, 2, true, false).unwrap().is_some());
        // Adjacent pairs: each edge plus one private detour.
        let k6 = crate::generators::complete(6).unwrap();
        let b = find_block(&k6, 3, 2, false, true).unwrap().unwrap();
        assert_eq!(b.validate(&k6, 3, 2), Ok(()));
        assert!(find_block(&crate::generators::complete(5).unwrap(), 3, 2, false, true).unwrap().is_none());
    }
}
