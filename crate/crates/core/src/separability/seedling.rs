//! Seedlings and the seedling-or-block search.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::induced_paths_between;
use crate::patterns::is_induced_path;

use super::block::{find_block, Block, BLOCK_HOST_LIMIT};
use super::linkage::{check_rigidity, validate_linkage, Linkage, Rigidity};

/// An induced path `a`, and a μ-rigid linkage from the neighbours of `a`
/// to `linkage.y` avoiding `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seedling {
    pub a: Vec<usize>,
    pub linkage: Linkage,
    pub mu: usize,
}

impl Seedling {
    pub fn lambda(&self) -> usize {
        self.linkage.len()
    }
}

/// Open neighbourhood of a vertex set.
pub fn neighborhood(g: &Graph, a: &VertexSet) -> VertexSet {
    a.iter()
        .flat_map(|v| g.neighbors(v).iter().copied())
        .filter(|&w| !a.contains(w))
        .collect()
}

/// Recomputes every seedling condition, including rigidity. The outer
/// error is a size limit of the rigidity check; the inner one a violation.
pub fn validate_seedling(g: &Graph, s: &Seedling) -> Result<std::result::Result<(), String>> {
    if !is_induced_path(g, &s.a) {
        return Ok(Err(format!("{:?} is not an induced path", s.a)));
    }
    let a = VertexSet::from(&s.a[..]);
    if s.mu == 0 {
        return Ok(Err("μ must be positive".into()));
    }
    if s.linkage.x != neighborhood(g, &a) {
        return Ok(Err("the linkage must start from the neighbourhood of the path".into()));
    }
    if !s.linkage.y.is_disjoint(&a) {
        return Ok(Err("Y meets the path".into()));
    }
    let support = s.linkage.support();
    if !support.is_disjoint(&a) {
        return Ok(Err("the linkage meets the path".into()));
    }
    if let Err(e) = validate_linkage(g, &s.linkage) {
        return Ok(Err(e));
    }
    for p in &s.linkage.paths {
        if let Some(&v) = p[1..].iter().find(|&&v| g.neighbors(v).iter().any(|&w| a.contains(w))) {
            return Ok(Err(format!("vertex {v} of {p:?} past its first has a neighbour on the path")));
        }
    }
    Ok(match check_rigidity(g, &s.linkage, s.mu)? {
        Rigidity::Rigid => Ok(()),
        Rigidity::NotRigid { witness } => Err(format!("not {}-rigid: {:?}", s.mu, witness.paths)),
    })
}

/// Every induced path of the host, each listed once from its smaller end.
fn all_induced_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            out.extend(induced_paths_between(g, x, y));
        }
    }
    out
}

/// First (λ,μ)-seedling found, paths `a` in order of length then
/// lexicographically. Y is taken to be the set of linkage ends, which
/// loses nothing: the linkage meets any admissible Y exactly there.
pub fn find_seedling(g: &Graph, lambda: usize, mu: usize) -> Result<Option<Seedling>> {
    size_limit("host vertex count", g.n(), BLOCK_HOST_LIMIT)?;
    if lambda == 0 || mu == 0 {
        return Err(Error::InvalidParameter("λ and μ must be positive".into()));
    }
    // A nonempty linkage is never 1-rigid.
    if mu == 1 {
        return Ok(None);
    }
    let mut paths = all_induced_paths(g);
    paths.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    for a in paths {
        let aset = VertexSet::from(&a[..]);
        let x = neighborhood(g, &aset);
        let legs = legs_from(g, &aset, &x);
        let mut pick: Vec<usize> = Vec::new();
        if let Some(s) = choose_legs(g, &a, &x, &legs, lambda, mu, 0, &mut pick)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Induced paths starting in `x` whose later vertices avoid `x` and the
/// path vertices `a`.
fn legs_from(g: &Graph, a: &VertexSet, x: &VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in x.iter() {
        let mut path = vec![s];
        grow(g, a, x, &mut path, &mut out);
    }
    return out;

    fn grow(g: &Graph, a: &VertexSet, x: &VertexSet, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if a.contains(w) || x.contains(w) || path.contains(&w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            grow(g, a, x, path, out);
            path.pop();
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn choose_legs(
    g: &Graph,
    a: &[usize],
    x: &VertexSet,
    legs: &[Vec<usize>],
    lambda: usize,
    mu: usize,
    start: usize,
    pick: &mut Vec<usize>,
) -> Result<Option<Seedling>> {
    if pick.len() == lambda {
        let paths: Vec<Vec<usize>> = pick.iter().map(|&i| legs[i].clone()).collect();
        let y: VertexSet = paths.iter().map(|p| p[p.len() - 1]).collect();
        let linkage = Linkage { x: x.clone(), y, paths };
        if validate_linkage(g, &linkage).is_err() {
            return Ok(None);
        }
        return Ok(match check_rigidity(g, &linkage, mu)? {
            Rigidity::Rigid => Some(Seedling {
                a: a.to_vec(),
                linkage,
                mu,
            }),
            Rigidity::NotRigid { .. } => None,
        });
    }
    for i in start..legs.len() {
        let clash = pick.iter().any(|&j| legs[j].iter().any(|v| legs[i].contains(v)));
        if clash {
            continue;
        }
        pick.push(i);
        if let Some(s) = choose_legs(g, a, x, legs, lambda, mu, i + 1, pick)? {
            return Ok(Some(s));
        }
        pick.pop();
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// No stable strong (κ,λ)-block.
    Separable,
    /// A block exists and so does a (λ,μ)-seedling.
    SeedlingFound,
    /// A block exists and no seedling does.
    NeitherHolds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dichotomy {
    pub verdict: Verdict,
    pub block: Option<Block>,
    pub seedling: Option<Seedling>,
}

/// Searches for a stable strong (κ,λ)-block and, when one exists, for a
/// (λ,μ)-seedling.
pub fn seedling_or_block(g: &Graph, lambda: usize, mu: usize, kappa: usize) -> Result<Dichotomy> {
    size_limit("μ", mu, 3)?;
    let block = find_block(g, kappa, lambda, true, true)?;
    if block.is_none() {
        return Ok(Dichotomy {
            verdict: Verdict::Separable,
            block,
            seedling: None,
        });
    }
    let seedling = find_seedling(g, lambda, mu)?;
    Ok(Dichotomy {
        verdict: if seedling.is_some() { Verdict::SeedlingFound } else { Verdict::NeitherHolds },
        block,
        seedling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, random_graph};

    /// Centre 0 with `legs` legs of length `len`.
    fn spider(legs: usize, len: usize) -> Graph {
        let mut edges = Vec::new();
        for l in 0..legs {
            let mut prev = 0;
            for i in 0..len {
                let v = 1 + l * len + i;
                edges.push((prev, v));
                prev = v;
            }
        }
        Graph::from_edges(1 + legs * len, &edges).unwrap()
    }

    fn spider_seedling(legs: usize, len: usize, mu: usize) -> Seedling {
        let paths: Vec<Vec<usize>> = (0..legs).map(|l| (1 + l * len..1 + (l + 1) * len).collect()).collect();
        Seedling {
            a: vec![0],
            linkage: Linkage {
                x: paths.iter().map(|p| p[0]).collect(),
                y: paths.iter().map(|p| p[len - 1]).collect(),
                paths,
            },
            mu,
        }
    }

    #[test]
    fn spider_legs() {
        let g = spider(3, 3);
        assert_eq!(validate_seedling(&g, &spider_seedling(3, 3, 4)).unwrap(), Ok(()));
        // The legs are anticomplete, so three of them reroute nothing.
        assert!(validate_seedling(&g, &spider_seedling(3, 3, 3)).unwrap().is_err());
    }

    #[test]
    fn violations() {
        let g = spider(2, 2);
        let mut s = spider_seedling(2, 2, 3);
        assert_eq!(validate_seedling(&g, &s).unwrap(), Ok(()));
        s.linkage.y = s.linkage.y.union(&VertexSet::singleton(0));
        assert!(validate_seedling(&g, &s).unwrap().is_err());
        // A leg vertex past the first adjacent to the centre.
        let h = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 2)]).unwrap();
        let bad = Seedling {
            a: vec![0],
            linkage: Linkage {
                x: VertexSet::from(vec![1, 2, 3]),
                y: VertexSet::from(vec![4]),
                paths: vec![vec![3, 4]],
            },
            mu: 2,
        };
        assert_eq!(validate_seedling(&h, &bad).unwrap(), Ok(()));
        let worse = Seedling {
            linkage: Linkage {
                x: VertexSet::from(vec![1, 2, 3]),
                y: VertexSet::from(vec![4]),
                paths: vec![vec![1, 4]],
            },
            ..bad
        };
        assert!(validate_seedling(&h, &worse).unwrap().is_err());
    }

    #[test]
    fn found_seedlings_validate() {
        for seed in 0..20 {
            let g = random_graph(7, 1, 3, seed).unwrap();
            if let Some(s) = find_seedling(&g, 2, 2).unwrap() {
                assert_eq!(validate_seedling(&g, &s).unwrap(), Ok(()));
            }
        }
        // Two legs of a star are anticomplete; with μ = 3 they are rigid.
        let s = find_seedling(&spider(2, 1), 2, 3).unwrap().unwrap();
        assert_eq!(s.a, vec![0]);
    }

    #[test]
    fn dichotomy_examples() {
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(seedling_or_block(&tree, 2, 2, 2).unwrap().verdict, Verdict::Separable);
        assert_eq!(seedling_or_block(&complete(4).unwrap(), 2, 2, 2).unwrap().verdict, Verdict::Separable);
        let theta = Graph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let d = seedling_or_block(&theta, 3, 1, 2).unwrap();
        assert_eq!(d.verdict, Verdict::NeitherHolds);
        assert!(d.block.is_some());
    }
}
