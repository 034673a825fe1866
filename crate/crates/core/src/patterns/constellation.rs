//! Constellations: induced K_{p,q}-models whose first side consists of
//! single vertices and whose second side consists of induced paths.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Result};
use crate::graph::{Graph, VertexSet};

/// Largest host handled by the constellation searches.
pub const CONSTELLATION_HOST_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constellation {
    /// The single vertices `x_1..x_p`.
    pub singles: Vec<usize>,
    /// Induced paths `B_1..B_q` as vertex sequences.
    pub paths: Vec<Vec<usize>>,
}

/// Whether `seq` spells an induced path of `g` (a single vertex counts).
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.is_empty() || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from(seq);
    if set.len() != seq.len() {
        return false;
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

impl Constellation {
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = std::collections::HashSet::new();
        for &x in &self.singles {
            if x >= g.n() || !seen.insert(x) {
                return Err(format!("single vertex {x} invalid or repeated"));
            }
        }
        for (j, b) in self.paths.iter().enumerate() {
            if !is_induced_path(g, b) {
                return Err(format!("part B_{j} is not an induced path"));
            }
            for &v in b {
                if !seen.insert(v) {
                    return Err(format!("vertex {v} used twice"));
                }
            }
        }
        for (i, &x) in self.singles.iter().enumerate() {
            for &y in &self.singles[i + 1..] {
                if g.has_edge(x, y) {
                    return Err(format!("single vertices {x} and {y} are adjacent"));
                }
            }
            for (j, b) in self.paths.iter().enumerate() {
                if !b.iter().any(|&v| g.has_edge(x, v)) {
                    return Err(format!("{x} has no neighbour on B_{j}"));
                }
            }
        }
        for i in 0..self.paths.len() {
            for j in i + 1..self.paths.len() {
                let (a, b) = (VertexSet::from(&self.paths[i][..]), VertexSet::from(&self.paths[j][..]));
                if !g.is_anticomplete(&a, &b) {
                    return Err(format!("B_{i} and B_{j} are not anticomplete"));
                }
            }
        }
        Ok(())
    }
}

/// Every induced path of `g` inside `allowed`, each listed once with its
/// first vertex not larger than its last.
pub(crate) fn induced_paths_in(g: &Graph, allowed: &[bool]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !allowed[s] {
            continue;
        }
        let mut path = vec![s];
        extend(g, allowed, &mut path, &mut out);
    }
    return out;

    fn extend(g: &Graph, allowed: &[bool], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path[0] <= *path.last().unwrap() {
            out.push(path.clone());
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if !allowed[w] || path.contains(&w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            extend(g, allowed, path, out);
            path.pop();
        }
    }
}

fn stable_subsets(g: &Graph, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(g: &Graph, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                go(g, p, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    go(g, p, 0, &mut cur, &mut out);
    out
}

/// First (p,q)-constellation found: stable p-sets in lexicographic order,
/// then pairwise anticomplete paths in enumeration order.
pub fn find_constellation(g: &Graph, p: usize, q: usize) -> Result<Option<Constellation>> {
    find_ample_constellation(g, p, q, 0)
}

/// First `d`-ample (p,q)-constellation (`d = 0` accepts every
/// constellation).
pub fn find_ample_constellation(g: &Graph, p: usize, q: usize, d: usize) -> Result<Option<Constellation>> {
    size_limit("host vertex count", g.n(), CONSTELLATION_HOST_LIMIT)?;
    size_limit("p", p, 3)?;
    size_limit("q", q, 3)?;
    for singles in stable_subsets(g, p) {
        let mut allowed = vec![true; g.n()];
        for &x in &singles {
            allowed[x] = false;
        }
        let paths: Vec<Vec<usize>> = induced_paths_in(g, &allowed)
            .into_iter()
            .filter(|b| singles.iter().all(|&x| b.iter().any(|&v| g.has_edge(x, v))))
            .collect();
        let sets: Vec<VertexSet> = paths.iter().map(|b| VertexSet::from(&b[..])).collect();
        let mut chosen = Vec::new();
        if let Some(c) = pick_paths(g, &singles, &paths, &sets, q, d, 0, &mut chosen) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn pick_paths(
    g: &Graph,
    singles: &[usize],
    paths: &[Vec<usize>],
    sets: &[VertexSet],
    q: usize,
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<Constellation> {
    if chosen.len() == q {
        let c = Constellation {
            singles: singles.to_vec(),
            paths: chosen.iter().map(|&i| paths[i].clone()).collect(),
        };
        return is_d_ample(g, &c, d).then_some(c);
    }
    for i in start..paths.len() {
        if chosen.iter().all(|&j| g.is_anticomplete(&sets[i], &sets[j])) {
            chosen.push(i);
            if let Some(c) = pick_paths(g, singles, paths, sets, q, d, i + 1, chosen) {
                return Some(c);
            }
            chosen.pop();
        }
    }
    None
}

/// Length of the shortest induced path between two single vertices whose
/// interior lies in one path of the constellation, over all pairs and
/// paths; `None` if no such path exists.
pub fn shortest_linking_length(g: &Graph, c: &Constellation) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &x) in c.singles.iter().enumerate() {
        for &y in &c.singles[i + 1..] {
            for b in &c.paths {
                let mut allowed = vec![false; g.n()];
                for &v in b {
                    allowed[v] = true;
                }
                allowed[x] = true;
                allowed[y] = true;
                let len = shortest_induced_path_len(g, x, y, &allowed);
                if let Some(l) = len {
                    best = Some(best.map_or(l, |b| b.min(l)));
                }
            }
        }
    }
    best
}

/// Every induced path from `x` to `y` with interior in `allowed` is
/// enumerated; the shortest length is returned.
fn shortest_induced_path_len(g: &Graph, x: usize, y: usize, allowed: &[bool]) -> Option<usize> {
    let mut best = None;
    let mut path = vec![x];
    fn go(g: &Graph, y: usize, allowed: &[bool], path: &mut Vec<usize>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        if last == y {
            let l = path.len() - 1;
            *best = Some(best.map_or(l, |b: usize| b.min(l)));
            return;
        }
        for &w in g.neighbors(last) {
            if !allowed[w] || path.contains(&w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            go(g, y, allowed, path, best);
            path.pop();
        }
    }
    go(g, y, allowed, &mut path, &mut best);
    best
}

/// Whether every induced path between two single vertices with interior in
/// one path of the constellation has length at least `d + 2`.
pub fn is_d_ample(g: &Graph, c: &Constellation, d: usize) -> bool {
    shortest_linking_length(g, c).is_none_or(|l| l >= d + 2)
}
