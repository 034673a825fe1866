//! Path-induced and branch-induced regular subtrees.

use crate::error::{size_limit, Error};
use crate::generators::complete;
use crate::graph::{Graph, VertexSet};
use crate::patterns::MinorModel;
use crate::tree::RootedTree;

use super::longpath::long_path_dichotomy;
use super::uniform::{branching, path_uniform};
use super::{ExtractionError, ExtractionResult, LongPathOutcome, RegularSubtreeCertificate, TreeProperty};

fn staged(stage: &'static str) -> impl Fn(ExtractionError) -> ExtractionError {
    move |e| ExtractionError::Stage {
        stage,
        source: Box::new(e),
    }
}

/// Descendants of `v` exactly `gap` levels below it, ascending.
fn descendants_at(t: &RootedTree, v: usize, gap: usize) -> Vec<usize> {
    let mut level = vec![v];
    for _ in 0..gap {
        level = level.iter().flat_map(|&x| t.children(x).iter().copied()).collect();
    }
    level.sort_unstable();
    level
}

/// A (δ,ρ)-regular tree, possibly re-rooted, in which every vertex hangs
/// from one of its ancestors in `t` and every root-to-leaf path is an
/// induced path of `g`.
///
/// The tree is first made path-uniform. Along the root path of its first
/// leaf every vertex must have fewer than 2τ adjacent ancestors, otherwise
/// path-uniformity produces a `K_{τ,τ}` subgraph, which is returned. The
/// long-path dichotomy is then run with τ' = max(2, 1 + the largest such
/// count), which needs depth at least τ'^ρ (at most (2τ)^ρ), and its induced
/// path is copied to every branch level by level. When the lowest ρ+1
/// vertices of that root path already induce a path they are used as they
/// are, so shallow trees that are induced in `g` need no extra depth.
pub fn path_induced_extract(
    g: &Graph,
    t: &RootedTree,
    delta: usize,
    rho: usize,
    tau: usize,
) -> ExtractionResult<RegularSubtreeCertificate> {
    if delta < 2 || tau == 0 {
        return Err(ExtractionError::Precondition("need delta >= 2 and tau >= 1".into()));
    }
    let depth = t.height();
    branching(t, depth)?;
    if rho == 0 {
        let tree = RootedTree::from_parents(t.n_ids(), t.root(), &[])?;
        return Ok(certificate(t, tree, delta, rho));
    }
    let uniform = path_uniform(g, t, delta, depth).map_err(staged("path-uniform"))?.tree;
    let w = uniform.level(depth)[0];
    let xs: Vec<usize> = (0..=depth).map(|i| uniform.ancestor(w, i).expect("leaf at full depth")).collect();
    let mut widest = 0;
    for i0 in 0..=depth {
        let later: Vec<usize> = (i0 + 1..=depth).filter(|&i| g.has_edge(xs[i0], xs[i])).collect();
        if later.len() >= 2 * tau {
            return Err(complete_bipartite_witness(g, &uniform, &xs, i0, &later, tau));
        }
        widest = widest.max(later.len());
    }
    let js = if depth >= rho && induces_path(g, &xs[..=rho]) {
        (0..=rho).collect()
    } else {
        let tau_long = (widest + 1).max(2);
        let needed = (tau_long as u64).checked_pow(rho as u32).unwrap_or(u64::MAX);
        if needed > depth as u64 {
            return Err(ExtractionError::Precondition(format!(
                "depth {depth} is below {tau_long}^{rho}"
            )));
        }
        match long_path_dichotomy(g, &xs, tau_long, rho).map_err(staged("long-path"))? {
            LongPathOutcome::InducedPath { indices } => indices,
            LongPathOutcome::HighDegree { .. } => {
                return Err(Error::Internal("long path has a vertex of high forward degree".into()).into())
            }
        }
    };
    let top = xs[js[rho]];
    let mut pairs = Vec::new();
    let mut level = vec![top];
    for i in (0..rho).rev() {
        let gap = js[i + 1] - js[i];
        let mut next = Vec::new();
        for &y in &level {
            for &c in descendants_at(&uniform, y, gap).iter().take(delta) {
                pairs.push((c, y));
                next.push(c);
            }
        }
        level = next;
    }
    let tree = RootedTree::from_parents(t.n_ids(), top, &pairs)?;
    Ok(certificate(t, tree, delta, rho))
}

fn induces_path(g: &Graph, xs: &[usize]) -> bool {
    (0..xs.len()).all(|a| (a + 1..xs.len()).all(|b| g.has_edge(xs[a], xs[b]) == (b == a + 1)))
}

fn certificate(parent: &RootedTree, tree: RootedTree, delta: usize, rho: usize) -> RegularSubtreeCertificate {
    RegularSubtreeCertificate {
        parent: parent.clone(),
        tree,
        delta,
        rho,
        property: TreeProperty::PathInduced,
        colour: None,
    }
}

/// `xs[i0]` has at least 2τ adjacent ancestors `later`; the τ highest lie
/// more than τ levels up, and the vertices at the height of `xs[i0]` below
/// the lowest of them all see the same ancestors.
fn complete_bipartite_witness(
    g: &Graph,
    uniform: &RootedTree,
    xs: &[usize],
    i0: usize,
    later: &[usize],
    tau: usize,
) -> ExtractionError {
    let right_idx = &later[later.len() - tau..];
    let right: Vec<usize> = right_idx.iter().map(|&i| xs[i]).collect();
    let left: Vec<usize> = descendants_at(uniform, xs[right_idx[0]], right_idx[0] - i0)
        .into_iter()
        .take(tau)
        .collect();
    let complete_sides = left.len() == tau && left.iter().all(|&a| right.iter().all(|&b| g.has_edge(a, b)));
    if complete_sides {
        ExtractionError::CompleteBipartite { left, right }
    } else {
        Error::Internal("path-uniform tree failed to yield K_{t,t}".into()).into()
    }
}

/// A (δ,ρ)-regular rooted subtree, same root, in which every host edge
/// between two of its vertices joins a vertex to an ancestor. `t` must be
/// (Δ,ρ)-regular with Δ ≥ τ^(δ-1), Δ ≤ 64. At each kept vertex the
/// lexicographically first δ children with pairwise anticomplete subtrees
/// are kept; if there are none, τ children with pairwise touching subtrees
/// give a `K_{τ+1}` minor, which is returned.
pub fn branch_induced_extract(g: &Graph, t: &RootedTree, delta: usize, tau: usize) -> ExtractionResult<RegularSubtreeCertificate> {
    if delta == 0 || tau == 0 {
        return Err(ExtractionError::Precondition("delta and tau must be positive".into()));
    }
    let rho = t.height();
    let width = branching(t, rho)?;
    size_limit("children per vertex", width, 64)?;
    let needed = (tau as u64).checked_pow(delta as u32 - 1).unwrap_or(u64::MAX);
    if rho > 0 && (width as u64) < needed {
        return Err(ExtractionError::Precondition(format!(
            "vertices have {width} children, fewer than {tau}^{}",
            delta - 1
        )));
    }
    if t.n_ids() != g.n() || !t.is_subgraph_of(g) {
        return Err(ExtractionError::Precondition("tree is not a subgraph of the host".into()));
    }
    let mut pairs = Vec::new();
    let mut frontier = vec![t.root()];
    for _ in 0..rho {
        let mut next = Vec::new();
        for v in frontier {
            let kids = t.children(v);
            let subtrees: Vec<VertexSet> = kids.iter().map(|&c| VertexSet::new(t.subtree(c))).collect();
            let mut conflict = vec![0u64; kids.len()];
            for a in 0..kids.len() {
                for b in a + 1..kids.len() {
                    if !g.is_anticomplete(&subtrees[a], &subtrees[b]) {
                        conflict[a] |= 1 << b;
                        conflict[b] |= 1 << a;
                    }
                }
            }
            let Some(chosen) = first_independent(&conflict, delta) else {
                return Err(clique_minor(g, v, &subtrees, &conflict, tau));
            };
            for k in chosen {
                pairs.push((kids[k], v));
                next.push(kids[k]);
            }
        }
        frontier = next;
    }
    let tree = RootedTree::from_parents(t.n_ids(), t.root(), &pairs)?;
    Ok(RegularSubtreeCertificate {
        parent: t.clone(),
        tree,
        delta,
        rho,
        property: TreeProperty::BranchInduced,
        colour: None,
    })
}

/// Lexicographically first `k` indices that are pairwise non-adjacent.
fn first_independent(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    fn go(adj: &[u64], k: usize, start: usize, blocked: u64, cur: &mut Vec<usize>) -> bool {
        if cur.len() == k {
            return true;
        }
        for i in start..adj.len() {
            if adj.len() - i < k - cur.len() {
                break;
            }
            if blocked >> i & 1 == 1 {
                continue;
            }
            cur.push(i);
            if go(adj, k, i + 1, blocked | adj[i], cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    go(adj, k, 0, 0, &mut cur).then_some(cur)
}

fn clique_minor(g: &Graph, v: usize, subtrees: &[VertexSet], conflict: &[u64], tau: usize) -> ExtractionError {
    let all = if conflict.len() == 64 { u64::MAX } else { (1u64 << conflict.len()) - 1 };
    let best = crate::patterns::max_clique_in(conflict, all);
    if best.size < tau {
        return Error::Internal("no anticomplete children and no large clique of touching subtrees".into()).into();
    }
    let mut branch_sets = vec![VertexSet::singleton(v)];
    branch_sets.extend(best.vertices.iter().take(tau).map(|k| subtrees[k].clone()));
    let model = MinorModel {
        branch_sets,
        induced: false,
    };
    let pattern = complete(tau + 1).expect("tau is positive");
    match model.validate(g, &pattern) {
        Ok(()) => ExtractionError::CliqueMinor { model },
        Err(e) => Error::Internal(format!("clique model failed to validate: {e}")).into(),
    }
}
