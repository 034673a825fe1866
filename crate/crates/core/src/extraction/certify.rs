//! Certificate checks. These only read parent pointers and host adjacency;
//! they share no logic with the extractors.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::tree::RootedTree;

use super::{LongPathOutcome, RegularSubtreeCertificate, TreeProperty};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum CertificateError {
    #[error("tree is not a rooted subtree of its parent tree")]
    NotSubtree,
    #[error("tree is not ({delta},{rho})-regular")]
    NotRegular { delta: usize, rho: usize },
    #[error("tree edge {child}-{parent} is not a host edge")]
    NotInHost { child: usize, parent: usize },
    #[error("leaf {leaf} breaks the {property:?} property")]
    Property { property: TreeProperty, leaf: usize },
    #[error("host edge {u}-{v} joins two incomparable tree vertices")]
    CrossEdge { u: usize, v: usize },
    #[error("leaf colour is missing or differs from the claimed one")]
    Colour,
    #[error("long-path certificate invalid: {0}")]
    LongPath(String),
}

/// Root-ward path of `v`: `v`, its parent, ..., the root.
fn root_path(t: &RootedTree, v: usize) -> Vec<usize> {
    let mut out = vec![v];
    let mut x = v;
    while let Some(p) = t.parent(x) {
        out.push(p);
        x = p;
    }
    out
}

fn depths(t: &RootedTree) -> HashMap<usize, usize> {
    t.vertices().iter().map(|&v| (v, root_path(t, v).len() - 1)).collect()
}

/// Pairs `(i, j)`, `i < j`, whose `i`-ancestor and `j`-ancestor of `leaf`
/// are adjacent in `g`.
pub fn ancestor_pattern(g: &Graph, t: &RootedTree, leaf: usize) -> Vec<(usize, usize)> {
    let path = root_path(t, leaf);
    let mut out = Vec::new();
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            if g.has_edge(path[i], path[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

fn deepest(t: &RootedTree) -> Vec<usize> {
    let d = depths(t);
    let max = d.values().copied().max().unwrap_or(0);
    let mut out: Vec<usize> = d.into_iter().filter(|&(_, k)| k == max).map(|(v, _)| v).collect();
    out.sort_unstable();
    out
}

/// Every deepest leaf sees the same ancestor adjacency pattern in `g`.
pub fn is_path_uniform(g: &Graph, t: &RootedTree) -> bool {
    first_pattern_break(g, t, false).is_none()
}

/// Every root-to-deepest-leaf path is an induced path of `g`.
pub fn is_path_induced(g: &Graph, t: &RootedTree) -> bool {
    first_pattern_break(g, t, true).is_none()
}

fn first_pattern_break(g: &Graph, t: &RootedTree, induced: bool) -> Option<usize> {
    let leaves = deepest(t);
    let reference = match leaves.first() {
        Some(&l) => ancestor_pattern(g, t, l),
        None => return None,
    };
    leaves.into_iter().find(|&l| {
        let p = ancestor_pattern(g, t, l);
        if induced {
            p.iter().any(|&(i, j)| j != i + 1) || p.len() + 1 != root_path(t, l).len()
        } else {
            p != reference
        }
    })
}

/// Every host edge between tree vertices that is not a tree edge joins a
/// vertex to one of its ancestors.
pub fn is_branch_induced(g: &Graph, t: &RootedTree) -> bool {
    first_cross_edge(g, t).is_none()
}

fn first_cross_edge(g: &Graph, t: &RootedTree) -> Option<(usize, usize)> {
    let paths: HashMap<usize, Vec<usize>> = t.vertices().iter().map(|&v| (v, root_path(t, v))).collect();
    for &u in t.vertices() {
        for &v in g.neighbors(u) {
            if v <= u || !paths.contains_key(&v) {
                continue;
            }
            if !paths[&u].contains(&v) && !paths[&v].contains(&u) {
                return Some((u, v));
            }
        }
    }
    None
}

fn check_regular(t: &RootedTree, delta: usize, rho: usize) -> bool {
    let d = depths(t);
    let mut kids: HashMap<usize, usize> = HashMap::new();
    for &v in t.vertices() {
        if let Some(p) = t.parent(v) {
            *kids.entry(p).or_default() += 1;
        }
    }
    d.iter().all(|(&v, &k)| {
        let c = kids.get(&v).copied().unwrap_or(0);
        k <= rho && if k == rho { c == 0 } else { c == delta }
    })
}

impl RegularSubtreeCertificate {
    /// Re-checks the certificate. `g` is needed for every property except
    /// `Monochromatic`, which needs `colour` instead.
    pub fn validate(&self, g: Option<&Graph>, colour: Option<&dyn Fn(usize) -> usize>) -> Result<(), CertificateError> {
        let t = &self.tree;
        let parent = &self.parent;
        if t.n_ids() != parent.n_ids() || !t.vertices().iter().all(|&v| parent.contains(v)) {
            return Err(CertificateError::NotSubtree);
        }
        let ok_relation = match self.property {
            TreeProperty::PathInduced => t.edges().iter().all(|&(c, p)| {
                let up = root_path(parent, c);
                up.len() > 1 && up[1..].contains(&p)
            }),
            _ => t.root() == parent.root() && t.edges().iter().all(|&(c, p)| parent.parent(c) == Some(p)),
        };
        if !ok_relation {
            return Err(CertificateError::NotSubtree);
        }
        if !check_regular(t, self.delta, self.rho) {
            return Err(CertificateError::NotRegular {
                delta: self.delta,
                rho: self.rho,
            });
        }
        if self.property == TreeProperty::Monochromatic {
            let (Some(f), Some(c)) = (colour, self.colour) else {
                return Err(CertificateError::Colour);
            };
            let d = depths(t);
            if d.iter().any(|(&v, &k)| k == self.rho && f(v) != c) {
                return Err(CertificateError::Colour);
            }
            return Ok(());
        }
        let Some(g) = g else {
            return Err(CertificateError::NotSubtree);
        };
        for (c, p) in t.edges() {
            if c >= g.n() || p >= g.n() || !g.has_edge(c, p) {
                return Err(CertificateError::NotInHost { child: c, parent: p });
            }
        }
        match self.property {
            TreeProperty::PathUniform => match first_pattern_break(g, t, false) {
                Some(leaf) => Err(CertificateError::Property {
                    property: self.property,
                    leaf,
                }),
                None => Ok(()),
            },
            TreeProperty::PathInduced => match first_pattern_break(g, t, true) {
                Some(leaf) => Err(CertificateError::Property {
                    property: self.property,
                    leaf,
                }),
                None => Ok(()),
            },
            TreeProperty::BranchInduced => match first_cross_edge(g, t) {
                Some((u, v)) => Err(CertificateError::CrossEdge { u, v }),
                None => Ok(()),
            },
            TreeProperty::Monochromatic => unreachable!(),
        }
    }
}

/// Checks a long-path outcome against the walk it was computed from.
pub fn verify_long_path(
    g: &Graph,
    walk: &[usize],
    tau: usize,
    rho: usize,
    outcome: &LongPathOutcome,
) -> Result<(), CertificateError> {
    let bad = |m: &str| Err(CertificateError::LongPath(m.to_string()));
    match outcome {
        LongPathOutcome::HighDegree { index, later } => {
            if *index >= walk.len() || later.len() < tau {
                return bad("index out of range or too few neighbours");
            }
            let mut prev = *index;
            for &j in later {
                if j <= prev || j >= walk.len() || !g.has_edge(walk[*index], walk[j]) {
                    return bad("listed neighbour is not a later adjacent vertex");
                }
                prev = j;
            }
            Ok(())
        }
        LongPathOutcome::InducedPath { indices } => {
            if indices.len() != rho + 1 || indices[0] != 0 {
                return bad("wrong number of indices or first index not 0");
            }
            if indices.windows(2).any(|w| w[0] >= w[1]) || *indices.last().unwrap() >= walk.len() {
                return bad("indices not increasing within the walk");
            }
            for a in 0..indices.len() {
                for b in a + 1..indices.len() {
                    if g.has_edge(walk[indices[a]], walk[indices[b]]) != (b == a + 1) {
                        return bad("selected vertices do not induce a path");
                    }
                }
            }
            Ok(())
        }
    }
}
