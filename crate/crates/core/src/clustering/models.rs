//! Induced models of bipartite patterns: shrinking the A-side branch sets
//! to single vertices, and lifting a model found in a torso of a tight
//! tree decomposition back to the whole graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::MinorModel;
use crate::widths::{dominating_component, is_tight, torso, TreeDecomposition};

/// Output of [`minimize_model_side`]: the final model and the total A-side
/// size before the first round and after each round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minimization {
    pub model: MinorModel,
    pub measures: Vec<usize>,
}

/// Flags the A side after checking that `a_side` and its complement are
/// both stable in `h`.
fn bipartition(h: &Graph, a_side: &[usize]) -> Result<Vec<bool>> {
    let mut in_a = vec![false; h.n()];
    for &a in a_side {
        h.check_vertex(a)?;
        in_a[a] = true;
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| in_a[u] == in_a[v]) {
        return Err(Error::Precondition(format!("pattern edge {u}-{v} lies inside one side")));
    }
    Ok(in_a)
}

fn check_induced(g: &Graph, h: &Graph, m: &MinorModel) -> Result<()> {
    if !m.induced {
        return Err(Error::Precondition("the model must be induced".into()));
    }
    m.validate(g, h)
        .map_err(|v| Error::Precondition(format!("invalid input model: {v}")))
}

/// Rewrites an induced model of a bipartite `h`, whose A-side vertices all
/// have degree two, until every A-side branch set is a single vertex.
///
/// A round takes the first A vertex `a` with a larger set and its
/// neighbours `b0 < b1`, then picks `x1`, the first vertex of `X_a` with a
/// neighbour in `X_b1`. If `x1` also sees `X_b0`, `X_a` becomes `{x1}`.
/// Otherwise let `C` be the component of `X_a − x1` holding the first vertex
/// that sees `X_b0`: if `C` sees `X_b1` then `X_a` becomes `C`, else `X_a`
/// becomes `{x1}` and `C` moves into `X_b0`.
pub fn minimize_model_side(g: &Graph, h: &Graph, a_side: &[usize], m: &MinorModel) -> Result<Minimization> {
    let in_a = bipartition(h, a_side)?;
    if let Some(&a) = a_side.iter().find(|&&a| h.degree(a) != 2) {
        return Err(Error::Precondition(format!("A-side vertex {a} does not have degree two")));
    }
    check_induced(g, h, m)?;
    let mut sets = m.branch_sets.clone();
    let measure = |sets: &[VertexSet]| -> usize { (0..h.n()).filter(|&v| in_a[v]).map(|v| sets[v].len()).sum() };
    let mut measures = vec![measure(&sets)];
    while let Some(a) = (0..h.n()).find(|&v| in_a[v] && sets[v].len() >= 2) {
        let (b0, b1) = (h.neighbors(a)[0], h.neighbors(a)[1]);
        let sees = |v: usize, target: &VertexSet| g.neighbors(v).iter().any(|&w| target.contains(w));
        let x1 = sets[a]
            .iter()
            .find(|&v| sees(v, &sets[b1]))
            .ok_or_else(|| Error::Internal("branch sets of adjacent pattern vertices do not touch".into()))?;
        if sees(x1, &sets[b0]) {
            sets[a] = VertexSet::singleton(x1);
        } else {
            let rest = sets[a].difference(&VertexSet::singleton(x1));
            let x0 = rest
                .iter()
                .find(|&v| sees(v, &sets[b0]))
                .ok_or_else(|| Error::Internal("branch sets of adjacent pattern vertices do not touch".into()))?;
            let c = g
                .components_of(&rest)
                .into_iter()
                .find(|c| c.contains(x0))
                .expect("x0 lies in some component");
            if g.touches(&c, &sets[b1]) {
                sets[a] = c;
            } else {
                sets[b0] = sets[b0].union(&c);
                sets[a] = VertexSet::singleton(x1);
            }
        }
        let now = measure(&sets);
        if now >= *measures.last().unwrap() {
            return Err(Error::Internal(format!("A-side size did not drop ({now})")));
        }
        measures.push(now);
    }
    let model = MinorModel {
        branch_sets: sets,
        induced: true,
    };
    model
        .validate(g, h)
        .map_err(|v| Error::Internal(format!("minimised model failed validation: {v}")))?;
    Ok(Minimization { model, measures })
}

/// Turns an induced model of a bipartite `h` in the torso of `d` at `x`
/// (given in host ids, A side all singletons) into an induced model in
/// `g`. Each B-side set absorbs, for every neighbouring tree node whose bag
/// it meets, the first component beyond that node that dominates the
/// adhesion.
pub fn lift_model_via_torso(
    g: &Graph,
    d: &TreeDecomposition,
    x: usize,
    h: &Graph,
    a_side: &[usize],
    m: &MinorModel,
) -> Result<MinorModel> {
    d.validate(g).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    if x >= d.len() {
        return Err(Error::InvalidParameter(format!("tree node {x} does not exist")));
    }
    if let Err(f) = is_tight(g, d) {
        return Err(Error::Precondition(format!("decomposition is not tight at edge {}-{}", f.x, f.y)));
    }
    let in_a = bipartition(h, a_side)?;
    if m.branch_sets.len() != h.n() {
        return Err(Error::Precondition("model size does not match the pattern".into()));
    }
    if let Some(&a) = a_side.iter().find(|&&a| m.branch_sets[a].len() != 1) {
        return Err(Error::Precondition(format!("A-side set of {a} is not a single vertex")));
    }
    let bag = &d.bags[x];
    if m.branch_sets.iter().any(|s| !s.is_subset(bag)) {
        return Err(Error::Precondition("branch sets must lie in the bag".into()));
    }
    let (t, map) = torso(g, d, x)?;
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let local_model = MinorModel {
        branch_sets: m
            .branch_sets
            .iter()
            .map(|s| s.iter().map(|v| local[v]).collect())
            .collect(),
        induced: m.induced,
    };
    check_induced(&t, h, &local_model)?;
    let mut sets = m.branch_sets.clone();
    for y in d.tree_neighbors(x) {
        let c = dominating_component(g, d, x, y).expect("tight decompositions have dominating components");
        for v in (0..h.n()).filter(|&v| !in_a[v]) {
            if !m.branch_sets[v].is_disjoint(&d.bags[y]) {
                sets[v] = sets[v].union(&c);
            }
        }
    }
    let out = MinorModel {
        branch_sets: sets,
        induced: true,
    };
    out.validate(g, h)
        .map_err(|v| Error::Internal(format!("lifted model failed validation: {v}")))?;
    Ok(out)
}
