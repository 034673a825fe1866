//! Containment of a pattern graph in a host: embeddings, (induced) minor
//! models and topological models, their validation, and the searches that
//! find them.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    InducedSubgraph,
    Subgraph,
    Minor,
    InducedMinor,
    TopologicalSubgraph,
}

impl std::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Relation> {
        Ok(match s {
            "induced-subgraph" => Relation::InducedSubgraph,
            "subgraph" => Relation::Subgraph,
            "minor" => Relation::Minor,
            "induced-minor" => Relation::InducedMinor,
            "topological-subgraph" => Relation::TopologicalSubgraph,
            _ => return Err(Error::InvalidParameter(format!("unknown relation `{s}`"))),
        })
    }
}

/// Size limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetectLimits {
    /// Largest pattern for minor-type relations.
    pub max_pattern: usize,
    /// Largest host for minor-type relations (at most 128).
    pub max_host: usize,
    /// Largest pattern for the subgraph relations.
    pub max_subgraph_pattern: usize,
}

impl Default for DetectLimits {
    fn default() -> Self {
        DetectLimits {
            max_pattern: 6,
            max_host: 14,
            max_subgraph_pattern: 32,
        }
    }
}

/// Branch sets indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
    pub induced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "violation")]
pub enum ModelViolation {
    WrongSize { expected: usize, found: usize },
    InvalidVertex { vertex: usize },
    EmptyBranchSet { pattern_vertex: usize },
    DisconnectedBranchSet { pattern_vertex: usize },
    Overlap { a: usize, b: usize },
    MissingEdge { a: usize, b: usize },
    ExtraEdge { a: usize, b: usize },
    NotInjective { a: usize, b: usize },
    BadPath { edge: usize },
    /// The certificate does not fit the relation being checked.
    WrongKind,
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

impl MinorModel {
    /// Checks the model axioms; `induced` decides whether non-edges of the
    /// pattern must map to anticomplete branch sets.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), ModelViolation> {
        let h = pattern.n();
        if self.branch_sets.len() != h {
            return Err(ModelViolation::WrongSize {
                expected: h,
                found: self.branch_sets.len(),
            });
        }
        for (p, x) in self.branch_sets.iter().enumerate() {
            if let Some(v) = x.iter().find(|&v| v >= host.n()) {
                return Err(ModelViolation::InvalidVertex { vertex: v });
            }
            if x.is_empty() {
                return Err(ModelViolation::EmptyBranchSet { pattern_vertex: p });
            }
            if !host.is_connected_set(x) {
                return Err(ModelViolation::DisconnectedBranchSet { pattern_vertex: p });
            }
        }
        for a in 0..h {
            for b in a + 1..h {
                let (xa, xb) = (&self.branch_sets[a], &self.branch_sets[b]);
                if !xa.is_disjoint(xb) {
                    return Err(ModelViolation::Overlap { a, b });
                }
                let touching = host.touches(xa, xb);
                if pattern.has_edge(a, b) && !touching {
                    return Err(ModelViolation::MissingEdge { a, b });
                }
                if self.induced && !pattern.has_edge(a, b) && touching {
                    return Err(ModelViolation::ExtraEdge { a, b });
                }
            }
        }
        Ok(())
    }

    /// All host vertices used by the model.
    pub fn support(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .fold(VertexSet::empty(), |acc, x| acc.union(x))
    }
}

/// A subdivision of the pattern inside the host: branch vertices and one
/// host path per pattern edge (in `pattern.edges()` order), each running
/// from the image of the smaller end to the image of the larger end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologicalModel {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl TopologicalModel {
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), ModelViolation> {
        check_injection(host, &Graph::empty(pattern.n()), &self.branch, false)?;
        let edges = pattern.edges();
        if self.paths.len() != edges.len() {
            return Err(ModelViolation::WrongSize {
                expected: edges.len(),
                found: self.paths.len(),
            });
        }
        let mut used = vec![false; host.n()];
        for &b in &self.branch {
            used[b] = true;
        }
        for (i, (&(a, b), path)) in edges.iter().zip(&self.paths).enumerate() {
            let ok_ends = path.len() >= 2
                && path[0] == self.branch[a]
                && path[path.len() - 1] == self.branch[b]
                && path.iter().all(|&v| v < host.n())
                && path.windows(2).all(|w| host.has_edge(w[0], w[1]));
            if !ok_ends {
                return Err(ModelViolation::BadPath { edge: i });
            }
            for &v in &path[1..path.len() - 1] {
                if used[v] {
                    return Err(ModelViolation::BadPath { edge: i });
                }
                used[v] = true;
            }
        }
        Ok(())
    }

    /// The minor model in which each branch vertex takes the interiors of
    /// the paths of edges to larger pattern vertices.
    pub fn to_minor_model(&self, pattern: &Graph) -> MinorModel {
        let mut sets: Vec<Vec<usize>> = self.branch.iter().map(|&b| vec![b]).collect();
        for (&(a, _), path) in pattern.edges().iter().zip(&self.paths) {
            sets[a].extend_from_slice(&path[1..path.len() - 1]);
        }
        MinorModel {
            branch_sets: sets.into_iter().map(VertexSet::new).collect(),
            induced: false,
        }
    }
}

/// The certificate returned by [`detect_pattern`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// `map[p]` is the host image of pattern vertex `p`.
    Embedding { map: Vec<usize> },
    Model(MinorModel),
    Topological(TopologicalModel),
}

impl Witness {
    /// Re-checks the certificate for `relation`.
    pub fn validate(&self, host: &Graph, pattern: &Graph, relation: Relation) -> std::result::Result<(), ModelViolation> {
        match (self, relation) {
            (Witness::Embedding { map }, Relation::InducedSubgraph) => check_injection(host, pattern, map, true),
            (Witness::Embedding { map }, Relation::Subgraph) => check_injection(host, pattern, map, false),
            (Witness::Model(m), Relation::Minor) => m.validate(host, pattern),
            (Witness::Model(m), Relation::InducedMinor) if m.induced => m.validate(host, pattern),
            (Witness::Topological(t), Relation::TopologicalSubgraph) => t.validate(host, pattern),
            _ => Err(ModelViolation::WrongKind),
        }
    }
}

fn check_injection(host: &Graph, pattern: &Graph, map: &[usize], induced: bool) -> std::result::Result<(), ModelViolation> {
    if map.len() != pattern.n() {
        return Err(ModelViolation::WrongSize {
            expected: pattern.n(),
            found: map.len(),
        });
    }
    if let Some(&v) = map.iter().find(|&&v| v >= host.n()) {
        return Err(ModelViolation::InvalidVertex { vertex: v });
    }
    for a in 0..map.len() {
        for b in a + 1..map.len() {
            if map[a] == map[b] {
                return Err(ModelViolation::NotInjective { a, b });
            }
            let e = host.has_edge(map[a], map[b]);
            if pattern.has_edge(a, b) && !e {
                return Err(ModelViolation::MissingEdge { a, b });
            }
            if induced && !pattern.has_edge(a, b) && e {
                return Err(ModelViolation::ExtraEdge { a, b });
            }
        }
    }
    Ok(())
}

/// Searches for `pattern` in `host` under `relation` with default limits.
pub fn detect_pattern(host: &Graph, pattern: &Graph, relation: Relation) -> Result<Option<Witness>> {
    detect_pattern_with(host, pattern, relation, &DetectLimits::default())
}

/// Exhaustive search within `limits`; `None` means the pattern is absent.
pub fn detect_pattern_with(
    host: &Graph,
    pattern: &Graph,
    relation: Relation,
    limits: &DetectLimits,
) -> Result<Option<Witness>> {
    match relation {
        Relation::InducedSubgraph | Relation::Subgraph => {
            size_limit("pattern vertex count", pattern.n(), limits.max_subgraph_pattern)?;
            let induced = relation == Relation::InducedSubgraph;
            Ok(find_embedding(host, pattern, induced).map(|map| Witness::Embedding { map }))
        }
        Relation::Minor | Relation::InducedMinor => {
            size_limit("pattern vertex count", pattern.n(), limits.max_pattern)?;
            size_limit("host vertex count", host.n(), limits.max_host.min(128))?;
            let induced = relation == Relation::InducedMinor;
            Ok(find_model(host, pattern, induced).map(Witness::Model))
        }
        Relation::TopologicalSubgraph => {
            size_limit("pattern vertex count", pattern.n(), limits.max_pattern)?;
            size_limit("host vertex count", host.n(), limits.max_host)?;
            Ok(find_topological(host, pattern).map(Witness::Topological))
        }
    }
}

/// Pattern vertices ordered so that each (after the first of its
/// component) has as many earlier neighbours as possible.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let h = pattern.n();
    let mut placed = vec![false; h];
    let mut order = Vec::with_capacity(h);
    while order.len() < h {
        let next = (0..h)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let back = pattern.neighbors(p).iter().filter(|&&q| placed[q]).count();
                (back, pattern.degree(p), std::cmp::Reverse(p))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Injective map preserving edges (and non-edges when `induced`).
pub fn find_embedding(host: &Graph, pattern: &Graph, induced: bool) -> Option<Vec<usize>> {
    let h = pattern.n();
    if h > host.n() {
        return None;
    }
    let order = placement_order(pattern);
    let mut map = vec![usize::MAX; h];
    let mut used = vec![false; host.n()];
    fn go(
        host: &Graph,
        pattern: &Graph,
        order: &[usize],
        i: usize,
        induced: bool,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let p = order[i];
        let anchor = pattern.neighbors(p).iter().copied().find(|&q| map[q] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(q) => host.neighbors(map[q]).to_vec(),
            None => (0..host.n()).collect(),
        };
        for v in candidates {
            if used[v] || host.degree(v) < pattern.degree(p) {
                continue;
            }
            let fits = order[..i].iter().all(|&q| {
                let e = host.has_edge(v, map[q]);
                if pattern.has_edge(p, q) {
                    e
                } else {
                    !induced || !e
                }
            });
            if !fits {
                continue;
            }
            map[p] = v;
            used[v] = true;
            if go(host, pattern, order, i + 1, induced, map, used) {
                return true;
            }
            used[v] = false;
            map[p] = usize::MAX;
        }
        false
    }
    go(host, pattern, &order, 0, induced, &mut map, &mut used).then_some(map)
}

struct ModelSearch<'a> {
    adj: Vec<u128>,
    all: u128,
    pattern: &'a Graph,
    order: Vec<usize>,
    induced: bool,
    cap: usize,
    cap_hit: bool,
    sets: Vec<u128>,
    nbhd: Vec<u128>,
    used: u128,
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl ModelSearch<'_> {
    fn open_neighbourhood(&self, s: u128) -> u128 {
        bits(s).fold(0u128, |acc, v| acc | self.adj[v]) & !s
    }

    /// Host vertices still usable for pattern vertex `p`.
    fn region(&self, p: usize) -> u128 {
        let mut r = self.all & !self.used;
        if self.induced {
            for q in 0..self.pattern.n() {
                if q != p && self.sets[q] != 0 && !self.pattern.has_edge(p, q) {
                    r &= !self.nbhd[q];
                }
            }
        }
        r
    }

    /// Whether every unplaced pattern vertex can still be attached to its
    /// placed neighbours inside one component of its region.
    fn feasible(&self, from: usize) -> bool {
        let free = (self.all & !self.used).count_ones() as usize;
        if free < self.order.len() - from {
            return false;
        }
        for &r in &self.order[from..] {
            let region = self.region(r);
            let placed: Vec<usize> = self
                .pattern
                .neighbors(r)
                .iter()
                .copied()
                .filter(|&q| self.sets[q] != 0)
                .collect();
            if placed.is_empty() {
                if region == 0 {
                    return false;
                }
                continue;
            }
            let mut starts = region & self.nbhd[placed[0]];
            let mut ok = false;
            while starts != 0 {
                let s = starts.trailing_zeros() as usize;
                let comp = self.component(s, region);
                starts &= !comp;
                if placed.iter().all(|&q| comp & self.nbhd[q] != 0) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    fn component(&self, s: usize, region: u128) -> u128 {
        let mut comp = 1u128 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let nb = bits(frontier).fold(0u128, |acc, v| acc | self.adj[v]) & region & !comp;
            comp |= nb;
            frontier = nb;
        }
        comp
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let p = self.order[i];
        let region = self.region(p);
        let placed: Vec<usize> = self
            .pattern
            .neighbors(p)
            .iter()
            .copied()
            .filter(|&q| self.sets[q] != 0)
            .collect();
        let anchors = match placed.first() {
            Some(&q) => region & self.nbhd[q],
            None => region,
        };
        let mut earlier = 0u128;
        for s in bits(anchors) {
            let allowed = region & !earlier & !(1u128 << s);
            let cand = self.adj[s] & allowed;
            if self.grow(i, p, &placed, 1u128 << s, cand, allowed & !cand) {
                return true;
            }
            earlier |= 1u128 << s;
        }
        false
    }

    /// Enumerates connected sets extending `set` by vertices of `cand` and
    /// their neighbours within `allowed`, each set once.
    fn grow(&mut self, i: usize, p: usize, placed: &[usize], set: u128, cand: u128, fresh: u128) -> bool {
        if placed.iter().all(|&q| set & self.nbhd[q] != 0) && self.try_place(i, p, set) {
            return true;
        }
        if set.count_ones() as usize >= self.cap {
            if cand != 0 {
                self.cap_hit = true;
            }
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let new_nb = self.adj[v] & fresh;
            if self.grow(i, p, placed, set | 1u128 << v, rest | new_nb, fresh & !new_nb) {
                return true;
            }
        }
        false
    }

    fn try_place(&mut self, i: usize, p: usize, set: u128) -> bool {
        self.sets[p] = set;
        self.nbhd[p] = self.open_neighbourhood(set);
        self.used |= set;
        if self.feasible(i + 1) && self.run(i + 1) {
            return true;
        }
        self.used &= !set;
        self.sets[p] = 0;
        self.nbhd[p] = 0;
        false
    }
}

/// Branch-set search with iterative deepening on the branch-set size.
pub fn find_model(host: &Graph, pattern: &Graph, induced: bool) -> Option<MinorModel> {
    let n = host.n();
    assert!(n <= 128, "model search supports at most 128 host vertices");
    let h = pattern.n();
    if h > n {
        return None;
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| host.neighbors(v).iter().fold(0u128, |m, &w| m | 1u128 << w))
        .collect();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = ModelSearch {
        adj,
        all,
        pattern,
        order: placement_order(pattern),
        induced,
        cap: 1,
        cap_hit: false,
        sets: vec![0; h],
        nbhd: vec![0; h],
        used: 0,
    };
    let max_cap = n.saturating_sub(h.saturating_sub(1)).max(1);
    for cap in 1..=max_cap {
        search.cap = cap;
        search.cap_hit = false;
        if search.run(0) {
            let branch_sets = search
                .sets
                .iter()
                .map(|&s| VertexSet::new(bits(s).collect()))
                .collect();
            return Some(MinorModel { branch_sets, induced });
        }
        if !search.cap_hit {
            return None;
        }
    }
    None
}

/// Independent engine for tiny hosts: enumerates every partition of a
/// subset of the host into connected parts, reads off the quotient graph
/// and compares it with the pattern under all vertex bijections.
pub fn find_model_by_contraction(host: &Graph, pattern: &Graph, induced: bool) -> Option<MinorModel> {
    let n = host.n();
    let h = pattern.n();
    if h > n {
        return None;
    }
    if h == 0 {
        return Some(MinorModel {
            branch_sets: Vec::new(),
            induced,
        });
    }
    let mut label = vec![usize::MAX; n];
    let perms = permutations(h);
    fn go(
        host: &Graph,
        pattern: &Graph,
        induced: bool,
        perms: &[Vec<usize>],
        v: usize,
        parts: usize,
        label: &mut Vec<usize>,
    ) -> Option<MinorModel> {
        let h = pattern.n();
        if v == host.n() {
            if parts != h {
                return None;
            }
            return check_partition(host, pattern, induced, perms, label);
        }
        if parts + (host.n() - v) < h {
            return None;
        }
        label[v] = usize::MAX;
        if let Some(m) = go(host, pattern, induced, perms, v + 1, parts, label) {
            return Some(m);
        }
        let top = if parts < h { parts } else { parts - 1 };
        for l in 0..=top {
            label[v] = l;
            let np = if l == parts { parts + 1 } else { parts };
            if let Some(m) = go(host, pattern, induced, perms, v + 1, np, label) {
                return Some(m);
            }
        }
        label[v] = usize::MAX;
        None
    }
    go(host, pattern, induced, &perms, 0, 0, &mut label)
}

fn check_partition(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    perms: &[Vec<usize>],
    label: &[usize],
) -> Option<MinorModel> {
    let h = pattern.n();
    let mut parts = vec![Vec::new(); h];
    for (v, &l) in label.iter().enumerate() {
        if l != usize::MAX {
            parts[l].push(v);
        }
    }
    let parts: Vec<VertexSet> = parts.into_iter().map(VertexSet::new).collect();
    if parts.iter().any(|p| !host.is_connected_set(p)) {
        return None;
    }
    let mut quotient = vec![vec![false; h]; h];
    for (u, v) in host.edges() {
        let (a, b) = (label[u], label[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            quotient[a][b] = true;
            quotient[b][a] = true;
        }
    }
    for perm in perms {
        // perm[p] is the part assigned to pattern vertex p.
        let ok = (0..h).all(|a| {
            (a + 1..h).all(|b| {
                let q = quotient[perm[a]][perm[b]];
                if pattern.has_edge(a, b) {
                    q
                } else {
                    !induced || !q
                }
            })
        });
        if ok {
            return Some(MinorModel {
                branch_sets: perm.iter().map(|&i| parts[i].clone()).collect(),
                induced,
            });
        }
    }
    None
}

pub(crate) fn permutations(h: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(h);
    fn go(h: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == h {
            out.push(cur.clone());
            return;
        }
        for x in 0..h {
            if !cur.contains(&x) {
                cur.push(x);
                go(h, cur, out);
                cur.pop();
            }
        }
    }
    go(h, &mut cur, &mut out);
    out
}

/// Subdivision search: injective placement of branch vertices, then
/// routing of the pattern edges one by one along internally disjoint paths.
pub fn find_topological(host: &Graph, pattern: &Graph) -> Option<TopologicalModel> {
    let h = pattern.n();
    if h > host.n() {
        return None;
    }
    let edges = pattern.edges();
    let mut branch = vec![usize::MAX; h];
    let mut used = vec![false; host.n()];
    fn place(
        host: &Graph,
        pattern: &Graph,
        edges: &[(usize, usize)],
        p: usize,
        branch: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> Option<TopologicalModel> {
        if p == pattern.n() {
            let mut paths = Vec::new();
            return route(host, edges, 0, branch, used, &mut paths).then(|| TopologicalModel {
                branch: branch.clone(),
                paths,
            });
        }
        for v in 0..host.n() {
            if used[v] || host.degree(v) < pattern.degree(p) {
                continue;
            }
            used[v] = true;
            branch[p] = v;
            if let Some(m) = place(host, pattern, edges, p + 1, branch, used) {
                return Some(m);
            }
            used[v] = false;
        }
        branch[p] = usize::MAX;
        None
    }
    fn route(
        host: &Graph,
        edges: &[(usize, usize)],
        i: usize,
        branch: &[usize],
        used: &mut Vec<bool>,
        paths: &mut Vec<Vec<usize>>,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        let (a, b) = (branch[edges[i].0], branch[edges[i].1]);
        let mut path = vec![a];
        walk(host, edges, i, b, branch, used, &mut path, paths)
    }
    #[allow(clippy::too_many_arguments)]
    fn walk(
        host: &Graph,
        edges: &[(usize, usize)],
        i: usize,
        target: usize,
        branch: &[usize],
        used: &mut Vec<bool>,
        path: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in host.neighbors(last) {
            if w == target {
                path.push(w);
                paths.push(path.clone());
                if route(host, edges, i + 1, branch, used, paths) {
                    return true;
                }
                paths.pop();
                path.pop();
                continue;
            }
            if used[w] {
                continue;
            }
            used[w] = true;
            path.push(w);
            if walk(host, edges, i, target, branch, used, path, paths) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
        false
    }
    place(host, pattern, &edges, 0, &mut branch, &mut used)
}
