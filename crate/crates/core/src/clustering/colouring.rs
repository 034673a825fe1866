//! Star-pair vertex colourings and the edge colouring built from one.

use crate::error::{size_limit, Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{verify_coloring, ColoringBound, ColoringCertificate, ColoringClasses};

/// Largest graph handled by [`find_star_pair_coloring`].
pub const STAR_PAIR_LIMIT: usize = 12;

/// A proper colouring with the fewest classes, at most `max_colours`, in
/// which any two classes induce a star forest. Colours are assigned to
/// vertices in ascending order, each vertex taking a colour no larger than
/// one more than the largest used so far.
pub fn find_star_pair_coloring(g: &Graph, max_colours: usize) -> Result<Option<ColoringCertificate>> {
    size_limit("vertex count", g.n(), STAR_PAIR_LIMIT)?;
    let n = g.n();
    for k in 1..=max_colours.max(1) {
        let mut colour = vec![usize::MAX; n];
        if assign(g, &mut colour, 0, k, 0) {
            let mut classes = vec![Vec::new(); k];
            for (v, &c) in colour.iter().enumerate() {
                classes[c].push(v);
            }
            let cert = ColoringCertificate {
                classes: ColoringClasses::Vertex {
                    domain: VertexSet::new((0..n).collect()),
                    classes: classes.into_iter().map(VertexSet::new).collect(),
                },
                bound: ColoringBound::StarPair,
            };
            debug_assert!(verify_coloring(g, &cert).is_ok());
            return Ok(Some(cert));
        }
        if n == 0 {
            break;
        }
    }
    Ok(None)
}

fn assign(g: &Graph, colour: &mut [usize], v: usize, k: usize, used: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if stars_around(g, colour, v) && assign(g, colour, v + 1, k, used.max(c + 1)) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

/// Whether, among coloured vertices, the component of `v` in each union of
/// its class with a neighbour's class is a star. An induced subgraph of a
/// star forest is again one, so a failure here can never be repaired.
fn stars_around(g: &Graph, colour: &[usize], v: usize) -> bool {
    let c = colour[v];
    let mut others: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).filter(|&d| d != usize::MAX).collect();
    others.sort_unstable();
    others.dedup();
    others.into_iter().all(|d| {
        let mut comp = vec![v];
        let mut seen = vec![false; g.n()];
        seen[v] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] && (colour[w] == c || colour[w] == d) {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        let k = comp.len();
        if k <= 2 {
            return true;
        }
        let degrees: Vec<usize> = comp.iter().map(|&u| g.neighbors(u).iter().filter(|&&w| seen[w]).count()).collect();
        degrees.iter().sum::<usize>() == 2 * (k - 1) && degrees.contains(&(k - 1))
    })
}

/// The graph on the monochromatic components of a vertex colouring (class
/// by class, each class by minimum vertex) with two components adjacent
/// when some host edge joins them.
pub fn component_intersection_graph(g: &Graph, base: &ColoringCertificate) -> Result<(Graph, Vec<VertexSet>)> {
    let ColoringClasses::Vertex { classes, .. } = &base.classes else {
        return Err(Error::Precondition("the base colouring must colour vertices".into()));
    };
    let comps: Vec<VertexSet> = classes.iter().flat_map(|c| g.components_of(c)).collect();
    let mut owner = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            owner[v] = i;
        }
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != b && a != usize::MAX && b != usize::MAX {
            edges.push((a, b));
        }
    }
    Ok((Graph::from_edges_dedup(comps.len(), &edges)?, comps))
}

/// Edge colouring with one class per pair of star classes: `U_j` is the
/// union of the components in the pair's two classes, and class `j` takes
/// the edges of `G[U_j]` not taken before. A single star class is padded
/// with an empty one. With base diameter below `h` the output claims
/// diameter below `3h`, since a star of components spans at most
/// `3(h − 1) + 2` host steps.
pub fn edge_coloring_from_star(
    g: &Graph,
    base: &ColoringCertificate,
    star: &ColoringCertificate,
) -> Result<ColoringCertificate> {
    let ColoringBound::DiameterBelow(h) = base.bound else {
        return Err(Error::Precondition("the base colouring must claim a diameter bound".into()));
    };
    match &base.classes {
        ColoringClasses::Vertex { domain, .. } if domain.len() == g.n() => {}
        _ => return Err(Error::Precondition("the base colouring must colour every vertex".into())),
    }
    verify_coloring(g, base).map_err(|v| Error::Precondition(format!("base colouring: {v}")))?;
    let (gamma_graph, comps) = component_intersection_graph(g, base)?;
    if star.bound != ColoringBound::StarPair {
        return Err(Error::Precondition("the component colouring must claim the star-pair bound".into()));
    }
    let mut star_classes = match &star.classes {
        ColoringClasses::Vertex { domain, classes } if domain.len() == comps.len() => classes.clone(),
        _ => {
            return Err(Error::Precondition(format!(
                "the component colouring must colour all {} components",
                comps.len()
            )))
        }
    };
    verify_coloring(&gamma_graph, star).map_err(|v| Error::Precondition(format!("component colouring: {v}")))?;
    while star_classes.len() < 2 {
        star_classes.push(VertexSet::empty());
    }
    let gamma = star_classes.len();
    let mut taken = std::collections::HashSet::new();
    let mut classes = Vec::new();
    for a in 0..gamma {
        for b in a + 1..gamma {
            let u: VertexSet = star_classes[a]
                .iter()
                .chain(star_classes[b].iter())
                .flat_map(|c| comps[c].iter())
                .collect();
            let (sub, map) = g.induced_subgraph(&u)?;
            let mut class = Vec::new();
            for (x, y) in sub.edges() {
                let e = (map[x].min(map[y]), map[x].max(map[y]));
                if taken.insert(e) {
                    class.push(e);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
    }
    let cert = ColoringCertificate {
        classes: ColoringClasses::Edge { classes },
        bound: ColoringBound::DiameterBelow(3 * h),
    };
    verify_coloring(g, &cert).map_err(|v| Error::Internal(format!("edge colouring failed its check: {v}")))?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::{abyss_free_coloring, ColoringOutcome};
    use crate::generators::{complete, path};

    #[test]
    fn star_pair_counts() {
        let cases = [(Graph::empty(4), 1), (complete(3).unwrap(), 3), (path(4).unwrap(), 3), (path(3).unwrap(), 2)];
        for (g, k) in cases {
            let c = find_star_pair_coloring(&g, 6).unwrap().unwrap();
            assert_eq!(c.class_count(), k);
            assert!(verify_coloring(&g, &c).is_ok());
            if k > 1 {
                assert!(find_star_pair_coloring(&g, k - 1).unwrap().is_none());
            }
        }
    }

    /// Every colouring with `k` colours, checked by the certificate checker.
    fn exists_by_brute_force(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[code % k].push(v);
                code /= k;
            }
            let c = ColoringCertificate {
                classes: ColoringClasses::Vertex {
                    domain: VertexSet::new((0..n).collect()),
                    classes: classes.into_iter().map(VertexSet::new).collect(),
                },
                bound: ColoringBound::StarPair,
            };
            verify_coloring(g, &c).is_ok()
        })
    }

    #[test]
    fn minimum_matches_brute_force() {
        for seed in 0..30 {
            let g = crate::generators::random_graph(6, 1, 3, seed).unwrap();
            let c = find_star_pair_coloring(&g, 6).unwrap().unwrap();
            let k = c.class_count();
            assert!(exists_by_brute_force(&g, k));
            assert!(k == 1 || !exists_by_brute_force(&g, k - 1));
        }
    }

    fn two_cliques() -> Graph {
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b));
                edges.push((a + 4, b + 4));
            }
        }
        edges.push((3, 4));
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn two_cliques_joined() {
        let g = two_cliques();
        let all = VertexSet::new((0..8).collect());
        let ColoringOutcome::Coloring(base) = abyss_free_coloring(&g, &all, 1, 4).unwrap() else {
            panic!("no (1,4)-abyss in a graph of diameter 3");
        };
        let (gamma, _) = component_intersection_graph(&g, &base).unwrap();
        let star = find_star_pair_coloring(&gamma, 6).unwrap().unwrap();
        let edge = edge_coloring_from_star(&g, &base, &star).unwrap();
        let k = star.class_count().max(2);
        assert_eq!(edge.class_count(), k * (k - 1) / 2);
        assert_eq!(edge.bound, ColoringBound::DiameterBelow(12));
        assert!(verify_coloring(&g, &edge).is_ok());
    }

    #[test]
    fn one_class_is_padded() {
        let g = complete(4).unwrap();
        let all = VertexSet::new((0..4).collect());
        let ColoringOutcome::Coloring(base) = abyss_free_coloring(&g, &all, 0, 4).unwrap() else {
            panic!("K4 has diameter 1");
        };
        let (gamma, _) = component_intersection_graph(&g, &base).unwrap();
        assert_eq!(gamma.n(), 1);
        let star = find_star_pair_coloring(&gamma, 3).unwrap().unwrap();
        assert_eq!(star.class_count(), 1);
        let edge = edge_coloring_from_star(&g, &base, &star).unwrap();
        assert_eq!(edge.class_count(), 1);
        assert!(verify_coloring(&g, &edge).is_ok());
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let g = two_cliques();
        let base = ColoringCertificate {
            classes: ColoringClasses::Vertex {
                domain: VertexSet::new((0..8).collect()),
                classes: vec![VertexSet::new((0..8).collect())],
            },
            bound: ColoringBound::DiameterBelow(2),
        };
        let star = find_star_pair_coloring(&Graph::empty(1), 1).unwrap().unwrap();
        assert!(matches!(edge_coloring_from_star(&g, &base, &star), Err(Error::Precondition(_))));
    }
}
