//! Simple undirected graphs on dense ids `0..n` and the elementary predicates
//! built on them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted list of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Builds a set from the set bits of a mask.
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask_iter(mask).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Bitmask of the set; all ids must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub(crate) fn check_in(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&v) => Err(Error::InvalidVertex { vertex: v, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl From<&[usize]> for VertexSet {
    fn from(v: &[usize]) -> Self {
        VertexSet::new(v.to_vec())
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// How `Graph::subdivide` replaces each edge. Lengths count edges of the
/// replacing path and are listed in the order of `Graph::edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subdivision {
    /// Every edge becomes a path of length exactly `d + 1`.
    Exact(usize),
    /// Per-edge lengths, each at least `d + 1`.
    AtLeast { d: usize, lengths: Vec<usize> },
    /// Per-edge lengths, each at least 2.
    Proper { lengths: Vec<usize> },
}

/// Finite simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = r.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(r.n, &edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting out-of-range ids, loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Like `from_edges` but silently drops repeated edges. Loops and bad ids
    /// still fail.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e.dedup();
        Graph::from_edges(n, &e)
    }

    /// Builds from per-vertex adjacency masks (n ≤ 64).
    pub fn from_masks(masks: &[u64]) -> Graph {
        let n = masks.len();
        let mut edges = Vec::new();
        for (u, &mu) in masks.iter().enumerate() {
            for v in mask_iter(mu) {
                if u < v && v < n {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("masks describe a simple graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Per-vertex neighbourhood masks; requires n ≤ 64.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "adjacency masks need at most 64 vertices");
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    /// Subgraph induced by `x`, renumbered in ascending order of `x`; the
    /// returned map sends new ids to ids of `self`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        x.check_in(self.n())?;
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in x.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); x.len()];
        let mut m = 0;
        for (i, v) in x.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    if index[w] > i {
                        m += 1;
                    }
                }
            }
        }
        Ok((Graph { adj, m }, x.as_slice().to_vec()))
    }

    /// Induced subgraph on a slice of ids (any order; duplicates removed).
    pub fn induced(&self, x: &[usize]) -> Graph {
        self.induced_subgraph(&VertexSet::from(x))
            .expect("valid vertex ids")
            .0
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("complement is simple")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), &edges).expect("union is simple")
    }

    /// Connected components ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let all = vec![true; self.n()];
        self.components_in(&all)
    }

    /// Components of the subgraph induced by the vertices flagged in `allowed`.
    pub fn components_in(&self, allowed: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !allowed[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if allowed[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// Components of `G[x]`.
    pub fn components_of(&self, x: &VertexSet) -> Vec<VertexSet> {
        self.components_in(&self.flags(x))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `G[x]` is connected (the empty set counts as not connected).
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        !x.is_empty() && self.components_of(x).len() == 1
    }

    pub(crate) fn flags(&self, x: &VertexSet) -> Vec<bool> {
        let mut f = vec![false; self.n()];
        for v in x.iter() {
            f[v] = true;
        }
        f
    }

    /// BFS distances from `u` inside the vertices flagged in `allowed`
    /// (`u` itself must be allowed). `None` means unreachable.
    pub fn distances_in(&self, u: usize, allowed: &[bool]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        if !allowed[u] {
            return dist;
        }
        dist[u] = Some(0);
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            let d = dist[x].unwrap();
            for &w in &self.adj[x] {
                if allowed[w] && dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self, u: usize) -> Vec<Option<usize>> {
        self.distances_in(u, &vec![true; self.n()])
    }

    /// All-pairs distances by repeated BFS.
    pub fn all_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n()).map(|u| self.distances(u)).collect()
    }

    /// Layers `N^0(u), N^1(u), …` of the component of `u`.
    pub fn distance_layers(&self, u: usize) -> Result<Vec<VertexSet>> {
        self.check_vertex(u)?;
        Ok(layers_from(&self.distances(u)))
    }

    /// Distance layers of `u` in `G[x]`.
    pub fn distance_layers_within(&self, u: usize, x: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_vertex(u)?;
        x.check_in(self.n())?;
        if !x.contains(u) {
            return Err(Error::InvalidParameter(format!("vertex {u} is not in the set")));
        }
        Ok(layers_from(&self.distances_in(u, &self.flags(x))))
    }

    /// True iff `x` and `y` are disjoint and no edge joins them.
    pub fn is_anticomplete(&self, x: &VertexSet, y: &VertexSet) -> bool {
        if !x.is_disjoint(y) {
            return false;
        }
        let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
        small
            .iter()
            .all(|v| self.adj[v].iter().all(|&w| !large.contains(w)))
    }

    /// Whether some edge joins `x` and `y` (they may intersect).
    pub fn touches(&self, x: &VertexSet, y: &VertexSet) -> bool {
        x.iter().any(|v| self.adj[v].iter().any(|&w| y.contains(w)))
    }

    /// Largest G-distance between two vertices of `x`; `None` when two of
    /// them lie in different components.
    pub fn set_diameter(&self, x: &VertexSet) -> Option<usize> {
        let mut best = 0;
        for v in x.iter() {
            let d = self.distances(v);
            for w in x.iter() {
                best = best.max(d[w]?);
            }
        }
        Some(best)
    }

    /// Line graph; vertex `i` of the result is the `i`-th entry of
    /// `self.edges()`, which is also returned.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edges();
        let mut incident = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut le = Vec::new();
        for list in &incident {
            for a in 0..list.len() {
                for b in a + 1..list.len() {
                    le.push((list[a], list[b]));
                }
            }
        }
        let g = Graph::from_edges_dedup(edges.len(), &le).expect("line graph is simple");
        (g, edges)
    }

    /// Replaces every edge `(u, v)` (in `edges()` order) by a path of the
    /// prescribed length. New vertices get ids `n, n+1, …`, edge by edge,
    /// running from `u` towards `v`.
    pub fn subdivide(&self, mode: &Subdivision) -> Result<Graph> {
        let edges = self.edges();
        let lengths = match mode {
            Subdivision::Exact(d) => vec![d + 1; edges.len()],
            Subdivision::AtLeast { d, lengths } => checked_lengths(lengths, d + 1, edges.len())?,
            Subdivision::Proper { lengths } => checked_lengths(lengths, 2, edges.len())?,
        };
        let mut next = self.n();
        let mut out = Vec::new();
        for (&(u, v), &len) in edges.iter().zip(&lengths) {
            let mut prev = u;
            for _ in 1..len {
                out.push((prev, next));
                prev = next;
                next += 1;
            }
            out.push((prev, v));
        }
        Graph::from_edges(next, &out)
    }
}

fn checked_lengths(lengths: &[usize], min: usize, m: usize) -> Result<Vec<usize>> {
    if lengths.len() != m {
        return Err(Error::InvalidParameter(format!(
            "{} lengths given for {m} edges",
            lengths.len()
        )));
    }
    if let Some(&l) = lengths.iter().find(|&&l| l < min) {
        return Err(Error::InvalidParameter(format!("path length {l} is below {min}")));
    }
    Ok(lengths.to_vec())
}

/// Groups vertices by BFS distance.
fn layers_from(dist: &[Option<usize>]) -> Vec<VertexSet> {
    let depth = dist.iter().flatten().copied().max().map_or(0, |d| d + 1);
    let mut layers = vec![Vec::new(); depth];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(v);
        }
    }
    layers.into_iter().map(VertexSet).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn induced_path_in_cycle() {
        let g = cycle(5);
        let (h, map) = g.induced_subgraph(&VertexSet::new(vec![1, 2, 3])).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![1, 2, 3]);
        let (e, _) = g.induced_subgraph(&VertexSet::empty()).unwrap();
        assert_eq!(e.n(), 0);
    }

    #[test]
    fn components_are_ordered() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 1), (1, 2), (0, 2)]).unwrap();
        let c = g.components();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].as_slice(), &[0, 1, 2]);
        assert_eq!(c[1].as_slice(), &[3, 4]);
        assert_eq!(Graph::empty(4).components().len(), 4);
    }

    #[test]
    fn anticomplete_needs_disjointness() {
        let g = cycle(6);
        let a = VertexSet::singleton(0);
        assert!(g.is_anticomplete(&a, &VertexSet::singleton(3)));
        assert!(!g.is_anticomplete(&a, &a));
        assert!(!g.is_anticomplete(&a, &VertexSet::singleton(1)));
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (l, labels) = claw.line_graph();
        assert_eq!((l.n(), l.m()), (3, 3));
        assert_eq!(labels, vec![(0, 1), (0, 2), (0, 3)]);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.line_graph().0.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn subdivision_modes() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.subdivide(&Subdivision::Exact(1)).unwrap();
        assert_eq!((s.n(), s.m()), (10, 12));
        assert!((4..10).all(|v| s.degree(v) == 2));
        assert_eq!(k4.subdivide(&Subdivision::Exact(0)).unwrap(), k4);
        assert!(k4
            .subdivide(&Subdivision::Proper {
                lengths: vec![2, 2, 2, 2, 2, 1]
            })
            .is_err());
        let t = k4
            .subdivide(&Subdivision::AtLeast {
                d: 1,
                lengths: vec![2, 3, 4, 2, 2, 2],
            })
            .unwrap();
        assert_eq!(t.n(), 4 + 1 + 2 + 3 + 1 + 1 + 1);
    }

    #[test]
    fn layers_of_path() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let l = p.distance_layers(0).unwrap();
        assert_eq!(l, vec![VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(2)]);
        assert!(p.distance_layers(3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let h: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, h);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,1],[1,0]]}"#).is_err());
    }
}
