//! Long paths either contain a vertex with many later neighbours or an
//! induced path through a chosen subsequence.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::{ExtractionError, ExtractionResult};

/// Longest walk accepted (number of edges).
const WALK_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LongPathOutcome {
    /// `walk[index]` is adjacent to `walk[j]` for every `j` in `later`
    /// (all larger than `index`, at least τ of them).
    HighDegree { index: usize, later: Vec<usize> },
    /// `indices[0] = 0` and the walk vertices at `indices` induce a path
    /// in this order.
    InducedPath { indices: Vec<usize> },
}

/// `walk` lists vertices `x_0, x_1, ...` with consecutive ones adjacent in
/// `g`; only the first τ^ρ + 1 are used.
pub fn long_path_dichotomy(g: &Graph, walk: &[usize], tau: usize, rho: usize) -> ExtractionResult<LongPathOutcome> {
    if tau == 0 || rho == 0 {
        return Err(ExtractionError::Precondition("tau and rho must be positive".into()));
    }
    let len = (tau as u64)
        .checked_pow(rho as u32)
        .filter(|&l| l <= WALK_LIMIT)
        .ok_or_else(|| ExtractionError::Precondition(format!("{tau}^{rho} exceeds the walk limit")))?
        as usize;
    if walk.len() < len + 1 {
        return Err(ExtractionError::Precondition(format!(
            "walk has {} vertices, needs {}",
            walk.len(),
            len + 1
        )));
    }
    let walk = &walk[..=len];
    for &v in walk {
        g.check_vertex(v)?;
    }
    if walk.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(ExtractionError::Precondition("consecutive walk vertices must be adjacent".into()));
    }
    let distinct: std::collections::HashSet<usize> = walk.iter().copied().collect();
    if distinct.len() != walk.len() {
        return Err(ExtractionError::Precondition("walk repeats a vertex".into()));
    }
    Ok(split(g, walk, tau, rho))
}

fn split(g: &Graph, xs: &[usize], tau: usize, rho: usize) -> LongPathOutcome {
    if rho == 1 {
        return LongPathOutcome::InducedPath { indices: vec![0, 1] };
    }
    let hits: Vec<usize> = (1..xs.len()).filter(|&i| g.has_edge(xs[0], xs[i])).collect();
    if hits.len() >= tau {
        return LongPathOutcome::HighDegree { index: 0, later: hits };
    }
    let sub = xs.len().saturating_sub(1) / tau;
    let top = xs.len() - 1;
    // Some gap between consecutive neighbours of x_0 (the end of the walk
    // closing the last gap) exceeds τ^(ρ-1).
    let start = (0..hits.len())
        .find(|&l| hits.get(l + 1).copied().unwrap_or(top) - hits[l] > sub)
        .map(|l| hits[l])
        .expect("one gap exceeds the average");
    match split(g, &xs[start..=start + sub], tau, rho - 1) {
        LongPathOutcome::HighDegree { index, later } => LongPathOutcome::HighDegree {
            index: start + index,
            later: later.into_iter().map(|j| start + j).collect(),
        },
        LongPathOutcome::InducedPath { indices } => {
            let mut out = vec![0];
            out.extend(indices.into_iter().map(|j| start + j));
            LongPathOutcome::InducedPath { indices: out }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraction::verify_long_path;
    use crate::generators::path;

    #[test]
    fn induced_walk() {
        let g = path(10).unwrap();
        let walk: Vec<usize> = (0..10).collect();
        for (tau, rho) in [(2, 1), (2, 2), (2, 3), (8, 1), (3, 2)] {
            let out = long_path_dichotomy(&g, &walk, tau, rho).unwrap();
            assert!(matches!(out, LongPathOutcome::InducedPath { .. }));
            assert_eq!(verify_long_path(&g, &walk, tau, rho, &out), Ok(()));
        }
    }

    #[test]
    fn first_vertex_sees_everything() {
        let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 1)).collect();
        edges.extend([(0, 2), (0, 3), (0, 4)]);
        let g = Graph::from_edges(5, &edges).unwrap();
        let walk: Vec<usize> = (0..5).collect();
        let out = long_path_dichotomy(&g, &walk, 2, 2).unwrap();
        assert_eq!(out, LongPathOutcome::HighDegree { index: 0, later: vec![1, 2, 3, 4] });
    }

    #[test]
    fn rho_one() {
        let g = path(2).unwrap();
        let out = long_path_dichotomy(&g, &[0, 1], 1, 1).unwrap();
        assert_eq!(out, LongPathOutcome::InducedPath { indices: vec![0, 1] });
    }
}
