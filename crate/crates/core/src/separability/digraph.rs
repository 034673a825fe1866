//! Digraphs without loops or parallel arcs, with the stable-set and
//! fan-selection searches.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::max_stable_set_with_limit;

/// Largest digraph handled by [`digraph_fan_selection`].
pub const FAN_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphRepr", into = "DigraphRepr")]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<DigraphRepr> for Digraph {
    type Error = Error;
    fn try_from(r: DigraphRepr) -> Result<Digraph> {
        Digraph::from_arcs(r.n, &r.arcs)
    }
}

impl From<Digraph> for DigraphRepr {
    fn from(d: Digraph) -> DigraphRepr {
        DigraphRepr { n: d.n(), arcs: d.arcs() }
    }
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if out[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            out[u].push(v);
        }
        for o in &mut out {
            o.sort_unstable();
        }
        Ok(Digraph { out })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| self.out[u].iter().map(move |&v| (u, v))).collect()
    }

    /// Vertices of out-degree at most `r`.
    pub fn low_out_degree(&self, r: usize) -> VertexSet {
        (0..self.n()).filter(|&v| self.out_degree(v) <= r).collect()
    }

    /// Vertices of out-degree at least `r`.
    pub fn high_out_degree(&self, r: usize) -> VertexSet {
        (0..self.n()).filter(|&v| self.out_degree(v) >= r).collect()
    }

    /// The underlying graph: `u ~ v` when an arc joins them either way.
    pub fn underlying(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.arcs();
        Graph::from_edges_dedup(self.n(), &edges).expect("arcs are valid")
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| s.iter().all(|v| !self.has_arc(u, v)))
    }

    /// Random digraph: each ordered pair is an arc with probability
    /// `num/den`.
    pub fn random(n: usize, num: u32, den: u32, seed: u64) -> Result<Digraph> {
        use rand::{Rng, SeedableRng};
        if den == 0 || num > den {
            return Err(Error::InvalidParameter(format!("arc probability {num}/{den}")));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_ratio(num, den) {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_arcs(n, &arcs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum StableSetOutcome {
    Stable { vertices: VertexSet },
    /// Fewer than `2rs` vertices of out-degree at most `r`.
    Inapplicable { low_degree: usize },
    /// The premise holds, yet the largest stable set among the low
    /// out-degree vertices is smaller than `s`.
    Shortfall { best: VertexSet },
}

/// A stable set of size `s` among the vertices of out-degree at most `r`.
/// Minimum-degree greedy on the underlying graph of that part comes first;
/// its average degree is below `2r`, so it yields at least `n′/(2r+1)`
/// vertices. When that is short, an exact search decides.
pub fn digraph_stable_set(d: &Digraph, r: usize, s: usize) -> Result<StableSetOutcome> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("r and s must be positive".into()));
    }
    let low = d.low_out_degree(r);
    if low.len() < 2 * r * s {
        return Ok(StableSetOutcome::Inapplicable { low_degree: low.len() });
    }
    let (sub, map) = d.underlying().induced_subgraph(&low)?;
    let mut alive = vec![true; sub.n()];
    let mut picked = Vec::new();
    while picked.len() < s {
        let Some(v) = (0..sub.n())
            .filter(|&v| alive[v])
            .min_by_key(|&v| sub.neighbors(v).iter().filter(|&&w| alive[w]).count())
        else {
            break;
        };
        picked.push(map[v]);
        alive[v] = false;
        for &w in sub.neighbors(v) {
            alive[w] = false;
        }
    }
    let vertices = if picked.len() == s {
        VertexSet::new(picked)
    } else {
        let best = max_stable_set_with_limit(&sub, 64)?;
        let chosen: VertexSet = best.vertices.iter().map(|v| map[v]).collect();
        if chosen.len() < s {
            return Ok(StableSetOutcome::Shortfall { best: chosen });
        }
        chosen.iter().take(s).collect()
    };
    if !d.is_stable(&vertices) || vertices.len() != s {
        return Err(Error::Internal("stable set failed its check".into()));
    }
    Ok(StableSetOutcome::Stable { vertices })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum FanOutcome {
    Found { vertices: VertexSet },
    /// Fewer than `2qrs` vertices of out-degree at least `qr`.
    Inapplicable { high_degree: usize },
    /// No `s`-subset has the property.
    Absent,
}

/// Whether every `q`-subset of `set` can be given pairwise disjoint
/// `r`-sets of out-neighbours outside `set`.
pub fn has_fan_property(d: &Digraph, set: &VertexSet, q: usize, r: usize) -> bool {
    let members = set.as_slice();
    if q > members.len() {
        return true;
    }
    let mut pick = Vec::new();
    every_subset(members, q, 0, &mut pick, &mut |chosen| fans_exist(d, set, chosen, r))
}

fn every_subset(items: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if pick.len() == k {
        return f(pick);
    }
    for i in start..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        let ok = every_subset(items, k, i + 1, pick, f);
        pick.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Bipartite matching from `r` copies of each chosen vertex into its
/// out-neighbours outside `set`.
fn fans_exist(d: &Digraph, set: &VertexSet, chosen: &[usize], r: usize) -> bool {
    let slots: Vec<usize> = chosen.iter().flat_map(|&v| std::iter::repeat_n(v, r)).collect();
    let mut owner = vec![usize::MAX; d.n()];
    fn augment(d: &Digraph, set: &VertexSet, slots: &[usize], i: usize, seen: &mut [bool], owner: &mut [usize]) -> bool {
        for &w in d.out_neighbors(slots[i]) {
            if set.contains(w) || seen[w] {
                continue;
            }
            seen[w] = true;
            if owner[w] == usize::MAX || augment(d, set, slots, owner[w], seen, owner) {
                owner[w] = i;
                return true;
            }
        }
        false
    }
    (0..slots.len()).all(|i| augment(d, set, &slots, i, &mut vec![false; d.n()], &mut owner))
}

/// First `s`-subset, in lexicographic order, with the fan property.
pub fn digraph_fan_selection(d: &Digraph, q: usize, r: usize, s: usize) -> Result<FanOutcome> {
    if q == 0 || r == 0 || s == 0 {
        return Err(Error::InvalidParameter("q, r and s must be positive".into()));
    }
    let high = d.high_out_degree(q * r);
    if high.len() < 2 * q * r * s {
        return Ok(FanOutcome::Inapplicable { high_degree: high.len() });
    }
    size_limit("digraph vertex count", d.n(), FAN_LIMIT)?;
    let all: Vec<usize> = (0..d.n()).collect();
    let mut found = None;
    let mut pick = Vec::new();
    every_subset(&all, s, 0, &mut pick, &mut |cand| {
        let set = VertexSet::from(cand);
        if has_fan_property(d, &set, q, r) {
            found = Some(set);
            false
        } else {
            true
        }
    });
    Ok(match found {
        Some(vertices) => FanOutcome::Found { vertices },
        None => FanOutcome::Absent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_arcs() {
        assert!(Digraph::from_arcs(2, &[(0, 0)]).is_err());
        assert!(Digraph::from_arcs(2, &[(0, 1), (0, 1)]).is_err());
        assert!(Digraph::from_arcs(2, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn stable_sets() {
        let empty = Digraph::from_arcs(6, &[]).unwrap();
        assert_eq!(
            digraph_stable_set(&empty, 1, 3).unwrap(),
            StableSetOutcome::Stable { vertices: VertexSet::from(vec![0, 1, 2]) }
        );
        let c8 = cycle(8);
        let StableSetOutcome::Stable { vertices } = digraph_stable_set(&c8, 1, 4).unwrap() else {
            panic!("an 8-cycle has 4 alternating vertices");
        };
        assert!(c8.is_stable(&vertices));
        let tournament = Digraph::from_arcs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            digraph_stable_set(&tournament, 0, 1).unwrap_err(),
            Error::InvalidParameter("r and s must be positive".into())
        );
        let dense = Digraph::from_arcs(3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]).unwrap();
        assert!(matches!(digraph_stable_set(&dense, 1, 1).unwrap(), StableSetOutcome::Inapplicable { low_degree: 0 }));
    }

    #[test]
    fn two_directed_triangles_fall_short() {
        let arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        let d = Digraph::from_arcs(6, &arcs).unwrap();
        let StableSetOutcome::Shortfall { best } = digraph_stable_set(&d, 1, 3).unwrap() else {
            panic!("every vertex meets two others of its triangle");
        };
        assert_eq!(best.len(), 2);
    }

    #[test]
    fn fan_selection() {
        let mut arcs = Vec::new();
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let k6 = Digraph::from_arcs(6, &arcs).unwrap();
        assert_eq!(
            digraph_fan_selection(&k6, 1, 1, 2).unwrap(),
            FanOutcome::Found { vertices: VertexSet::from(vec![0, 1]) }
        );
        // q = 1: each chosen vertex needs r out-neighbours outside.
        let star = Digraph::from_arcs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(has_fan_property(&star, &VertexSet::from(vec![0]), 1, 4));
        assert!(!has_fan_property(&star, &VertexSet::from(vec![0, 1]), 1, 4));
        // Two vertices sharing their only out-neighbour.
        let shared = Digraph::from_arcs(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(!has_fan_property(&shared, &VertexSet::from(vec![0, 1]), 2, 1));
        assert!(has_fan_property(&shared, &VertexSet::from(vec![0, 1]), 1, 1));
    }
}
