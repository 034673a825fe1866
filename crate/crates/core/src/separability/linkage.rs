//! (X,Y)-linkages and their rigidity.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::is_induced_path;

/// Largest vertex set a rigidity check enumerates.
pub const RIGIDITY_LIMIT: usize = 16;

/// Disjoint paths from `x` to `y`. Each path is stored from its X-end to
/// its Y-end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linkage {
    pub x: VertexSet,
    pub y: VertexSet,
    pub paths: Vec<Vec<usize>>,
}

impl Linkage {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// All vertices on the paths.
    pub fn support(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }
}

/// Whether `seq` may be one path of an (X,Y)-linkage: a single vertex of
/// X∩Y, or an induced path from X∖Y to Y∖X whose interior avoids X∪Y.
fn is_linkage_path(g: &Graph, x: &VertexSet, y: &VertexSet, seq: &[usize]) -> bool {
    if !is_induced_path(g, seq) {
        return false;
    }
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    if seq.len() == 1 {
        return x.contains(first) && y.contains(first);
    }
    x.contains(first)
        && !y.contains(first)
        && y.contains(last)
        && !x.contains(last)
        && seq[1..seq.len() - 1].iter().all(|&v| !x.contains(v) && !y.contains(v))
}

/// Checks the linkage axioms, with every path required to be induced.
pub fn validate_linkage(g: &Graph, l: &Linkage) -> std::result::Result<(), String> {
    let mut seen = std::collections::HashSet::new();
    for (i, p) in l.paths.iter().enumerate() {
        if !is_linkage_path(g, &l.x, &l.y, p) {
            return Err(format!("path {i} ({p:?}) is not an induced X-to-Y path avoiding X∪Y inside"));
        }
        if let Some(&v) = p.iter().find(|&&v| !seen.insert(v)) {
            return Err(format!("vertex {v} lies on two paths"));
        }
    }
    Ok(())
}

/// Outcome of a rigidity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum Rigidity {
    Rigid,
    /// μ pairwise anticomplete linkage paths inside the support.
    NotRigid { witness: Linkage },
}

/// Whether no (X,Y)-linkage of μ pairwise anticomplete paths fits inside
/// the vertex set of `l`. Shortcutting a path inside its own vertex set
/// keeps it a linkage path, so only induced paths are enumerated.
pub fn check_rigidity(g: &Graph, l: &Linkage, mu: usize) -> Result<Rigidity> {
    let support = l.support();
    size_limit("linkage vertex count", support.len(), RIGIDITY_LIMIT)?;
    support.check_in(g.n())?;
    Ok(match anticomplete_linkage(g, &l.x, &l.y, &support, mu) {
        Some(paths) => Rigidity::NotRigid {
            witness: Linkage {
                x: l.x.clone(),
                y: l.y.clone(),
                paths,
            },
        },
        None => Rigidity::Rigid,
    })
}

/// Every induced linkage path with all vertices in `within`.
pub(crate) fn linkage_paths_within(g: &Graph, x: &VertexSet, y: &VertexSet, within: &VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in within.iter() {
        if !x.contains(s) {
            continue;
        }
        if y.contains(s) {
            out.push(vec![s]);
            continue;
        }
        let mut path = vec![s];
        grow(g, x, y, within, &mut path, &mut out);
    }
    return out;

    fn grow(g: &Graph, x: &VertexSet, y: &VertexSet, within: &VertexSet, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if !within.contains(w) || path.contains(&w) || x.contains(w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            if y.contains(w) {
                out.push(path.clone());
            } else {
                grow(g, x, y, within, path, out);
            }
            path.pop();
        }
    }
}

/// First family of `mu` pairwise anticomplete linkage paths inside
/// `within`, in enumeration order.
pub(crate) fn anticomplete_linkage(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    within: &VertexSet,
    mu: usize,
) -> Option<Vec<Vec<usize>>> {
    if mu == 0 {
        return Some(Vec::new());
    }
    let paths = linkage_paths_within(g, x, y, within);
    let sets: Vec<VertexSet> = paths.iter().map(|p| VertexSet::from(&p[..])).collect();
    let mut chosen = Vec::new();
    fn pick(g: &Graph, sets: &[VertexSet], mu: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == mu {
            return true;
        }
        for i in start..sets.len() {
            if sets.len() - i < mu - chosen.len() {
                return false;
            }
            if chosen.iter().all(|&j| g.is_anticomplete(&sets[i], &sets[j])) {
                chosen.push(i);
                if pick(g, sets, mu, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    pick(g, &sets, mu, 0, &mut chosen).then(|| chosen.into_iter().map(|i| paths[i].clone()).collect())
}
