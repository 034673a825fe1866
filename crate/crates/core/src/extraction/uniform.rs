//! Monochromatic and path-uniform regular subtrees.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::tree::RootedTree;

use super::{ExtractionError, ExtractionResult, RegularSubtreeCertificate, TreeProperty};

/// Checks that `t` is (Δ,ρ)-regular for some Δ and returns Δ.
pub(crate) fn branching(t: &RootedTree, rho: usize) -> ExtractionResult<usize> {
    let delta = if rho == 0 { 0 } else { t.children(t.root()).len() };
    if t.height() != rho || !t.is_regular(delta, rho) {
        return Err(ExtractionError::Precondition(format!("tree is not regular of depth {rho}")));
    }
    Ok(delta)
}

/// A (δ,ρ)-regular rooted subtree, same root, whose depth-ρ vertices all
/// get one colour. `t` must be (Δ,ρ)-regular with Δ ≥ δγ and `colour` may
/// use at most γ values on the depth-ρ vertices.
///
/// Bottom-up, each vertex keeps the smallest colour carried by at least δ
/// of its children together with the first δ such children; the root's
/// colour is the answer and the kept children are read off top-down.
pub fn color_uniform(
    t: &RootedTree,
    colour: &dyn Fn(usize) -> usize,
    delta: usize,
    gamma: usize,
) -> ExtractionResult<RegularSubtreeCertificate> {
    if delta == 0 || gamma == 0 {
        return Err(ExtractionError::Precondition("delta and gamma must be positive".into()));
    }
    let rho = t.height();
    let width = branching(t, rho)?;
    if rho > 0 && width < delta * gamma {
        return Err(ExtractionError::Precondition(format!(
            "vertices have {width} children, fewer than {delta}*{gamma}"
        )));
    }
    let leaves = t.level(rho);
    let used: std::collections::BTreeSet<usize> = leaves.iter().map(|&v| colour(v)).collect();
    if used.len() > gamma {
        return Err(ExtractionError::Precondition(format!(
            "{} colours used, more than {gamma}",
            used.len()
        )));
    }
    let mut carried = vec![usize::MAX; t.n_ids()];
    for &v in &leaves {
        carried[v] = colour(v);
    }
    let mut kept: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for d in (0..rho).rev() {
        for x in t.level(d) {
            let mut by_colour: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &c in t.children(x) {
                by_colour.entry(carried[c]).or_default().push(c);
            }
            let (&i, members) = by_colour
                .iter()
                .find(|(_, m)| m.len() >= delta)
                .expect("pigeonhole: Δ ≥ δγ children over at most γ colours");
            carried[x] = i;
            kept.insert(x, members[..delta].to_vec());
        }
    }
    let root_colour = carried[t.root()];
    let mut pairs = Vec::new();
    let mut frontier = vec![t.root()];
    for _ in 0..rho {
        let mut next = Vec::new();
        for x in frontier {
            for &c in &kept[&x] {
                pairs.push((c, x));
                next.push(c);
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
        property: TreeProperty::Monochromatic,
        colour: Some(root_colour),
    })
}

/// Bitmask over index pairs `(i, j)`, `i < j ≤ ρ`, of the ancestors of
/// `leaf` that are adjacent in `g`.
fn pattern_of(g: &Graph, t: &RootedTree, leaf: usize, rho: usize) -> Vec<bool> {
    let anc: Vec<usize> = (0..=rho).map(|i| t.ancestor(leaf, i).expect("leaf at depth rho")).collect();
    let mut out = Vec::with_capacity(rho * (rho + 1) / 2);
    for i in 0..=rho {
        for j in i + 1..=rho {
            out.push(g.has_edge(anc[i], anc[j]));
        }
    }
    out
}

/// A (δ,ρ)-regular rooted subtree, same root, on which every leaf sees the
/// same ancestor adjacency pattern in `g`. Leaves are coloured by their
/// pattern and [`color_uniform`] is applied with γ equal to the number of
/// distinct patterns, so `t` needs Δ ≥ δ·(number of patterns) children per
/// vertex (at most δ·2^(ρ²)).
pub fn path_uniform(g: &Graph, t: &RootedTree, delta: usize, rho: usize) -> ExtractionResult<RegularSubtreeCertificate> {
    if t.n_ids() != g.n() {
        return Err(ExtractionError::Precondition("tree and host id spaces differ".into()));
    }
    branching(t, rho)?;
    if !t.is_subgraph_of(g) {
        return Err(ExtractionError::Precondition("tree is not a subgraph of the host".into()));
    }
    let leaves = t.level(rho);
    let mut index: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut leaf_colour = vec![usize::MAX; g.n()];
    let patterns: Vec<Vec<bool>> = leaves.iter().map(|&v| pattern_of(g, t, v, rho)).collect();
    for p in &patterns {
        let k = index.len();
        index.entry(p.clone()).or_insert(k);
    }
    for (&v, p) in leaves.iter().zip(&patterns) {
        leaf_colour[v] = index[p];
    }
    let gamma = index.len().max(1);
    let mut cert = color_uniform(t, &|v| leaf_colour[v], delta, gamma)?;
    cert.property = TreeProperty::PathUniform;
    cert.colour = None;
    Ok(cert)
}
