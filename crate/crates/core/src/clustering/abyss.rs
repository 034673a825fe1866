//! Abysses: a connected piece of G[X] holding vertices a_0..a_{σ+1}, nested
//! connected pieces each inside one distance layer of the previous piece,
//! and a last pair of vertices far apart in the host.

use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{mask_iter, Graph, VertexSet};

use super::{ColoringBound, ColoringCertificate, ColoringClasses};

/// Default limit on |X| for [`find_abyss`].
pub const ABYSS_LIMIT: usize = 14;

/// One nesting step: the next piece lies in layer `radius + 1` of the
/// previous piece around the previous chosen vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbyssLevel {
    pub radius: usize,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abyss {
    pub x: VertexSet,
    pub sigma: usize,
    pub theta: usize,
    /// `a_0, …, a_{σ+1}`.
    pub vertices: Vec<usize>,
    /// The connected piece `G_0` of `G[X]`.
    pub base: VertexSet,
    /// `(ρ_i, G_{i+1})` for `i < σ`.
    pub levels: Vec<AbyssLevel>,
}

impl Abyss {
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let sigma = self.sigma;
        if self.vertices.len() != sigma + 2 || self.levels.len() != sigma {
            return Err(format!(
                "expected {} vertices and {} levels, found {} and {}",
                sigma + 2,
                sigma,
                self.vertices.len(),
                self.levels.len()
            ));
        }
        let all_valid = self.vertices.iter().copied().chain(self.x.iter()).chain(self.base.iter()).all(|v| v < g.n())
            && self.levels.iter().all(|l| l.set.iter().all(|v| v < g.n()));
        if !all_valid {
            return Err("vertex outside the host".into());
        }
        if !self.base.is_subset(&self.x) {
            return Err("base piece is not inside X".into());
        }
        if !g.is_connected_set(&self.base) {
            return Err("base piece is not connected".into());
        }
        if let Some(&a) = self.vertices.iter().find(|&&a| !self.base.contains(a)) {
            return Err(format!("vertex {a} is not in the base piece"));
        }
        let mut prev = &self.base;
        for (i, level) in self.levels.iter().enumerate() {
            let layers = g.distance_layers_within(self.vertices[i], prev).map_err(|e| e.to_string())?;
            let layer = layers.get(level.radius + 1).cloned().unwrap_or_default();
            if !level.set.is_subset(&layer) {
                return Err(format!("piece {} is not inside layer {} around {}", i + 1, level.radius + 1, self.vertices[i]));
            }
            if !g.is_connected_set(&level.set) {
                return Err(format!("piece {} is not connected", i + 1));
            }
            if let Some(&a) = self.vertices[i + 1..].iter().find(|&&a| !level.set.contains(a)) {
                return Err(format!("vertex {a} is not in piece {}", i + 1));
            }
            prev = &level.set;
        }
        let d = g.distances(self.vertices[sigma])[self.vertices[sigma + 1]];
        if d.is_some_and(|d| d < self.theta) {
            return Err(format!("last pair at distance {} < {}", d.unwrap(), self.theta));
        }
        Ok(())
    }
}

/// The two outcomes of [`abyss_free_coloring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum ColoringOutcome {
    Coloring(ColoringCertificate),
    Abyss(Abyss),
}

/// Colours G[X] with 2^σ classes of G-diameter below θ, or returns the
/// abyss that blocks the construction. Each component gets its minimum
/// vertex as centre; its distance layers are coloured recursively with
/// 2^{σ−1} classes and class `i` of an even layer goes to colour `2i`, of
/// an odd layer to `2i + 1`.
pub fn abyss_free_coloring(g: &Graph, x: &VertexSet, sigma: usize, theta: usize) -> Result<ColoringOutcome> {
    x.check_in(g.n())?;
    if theta == 0 {
        return Err(Error::InvalidParameter("θ must be at least 1".into()));
    }
    size_limit("σ", sigma, 16)?;
    let dist = g.all_distances();
    Ok(match colour_rec(g, &dist, x, sigma, theta) {
        Ok(classes) => ColoringOutcome::Coloring(ColoringCertificate {
            classes: ColoringClasses::Vertex {
                domain: x.clone(),
                classes,
            },
            bound: ColoringBound::DiameterBelow(theta),
        }),
        Err(mut abyss) => {
            abyss.x = x.clone();
            abyss.sigma = sigma;
            abyss.theta = theta;
            ColoringOutcome::Abyss(abyss)
        }
    })
}

fn colour_rec(
    g: &Graph,
    dist: &[Vec<Option<usize>>],
    x: &VertexSet,
    sigma: usize,
    theta: usize,
) -> std::result::Result<Vec<VertexSet>, Abyss> {
    let mut classes = vec![Vec::new(); 1 << sigma];
    for comp in g.components_of(x) {
        if sigma == 0 {
            if let Some((a, b)) = far_pair(dist, comp.as_slice(), theta) {
                return Err(Abyss {
                    x: x.clone(),
                    sigma,
                    theta,
                    vertices: vec![a, b],
                    base: comp,
                    levels: Vec::new(),
                });
            }
            classes[0].extend(comp.iter());
            continue;
        }
        let a0 = comp.as_slice()[0];
        let layers = g.distance_layers_within(a0, &comp).expect("a0 lies in its component");
        for (rho, layer) in layers.iter().enumerate() {
            match colour_rec(g, dist, layer, sigma - 1, theta) {
                Ok(sub) => {
                    for (i, class) in sub.into_iter().enumerate() {
                        classes[2 * i + rho % 2].extend(class.iter());
                    }
                }
                Err(inner) => {
                    // Layer 0 is {a0}, which holds no abyss for θ ≥ 1.
                    debug_assert!(rho >= 1);
                    let mut vertices = vec![a0];
                    vertices.extend(inner.vertices);
                    let mut levels = vec![AbyssLevel {
                        radius: rho - 1,
                        set: inner.base,
                    }];
                    levels.extend(inner.levels);
                    return Err(Abyss {
                        x: x.clone(),
                        sigma,
                        theta,
                        vertices,
                        base: comp,
                        levels,
                    });
                }
            }
        }
    }
    Ok(classes.into_iter().map(VertexSet::new).collect())
}

/// First pair `(a, b)`, `a ≤ b` in ascending order, at host distance at
/// least θ.
fn far_pair(dist: &[Vec<Option<usize>>], set: &[usize], theta: usize) -> Option<(usize, usize)> {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i..] {
            if dist[a][b].is_none_or(|d| d >= theta) {
                return Some((a, b));
            }
        }
    }
    None
}

/// [`find_abyss_with_limit`] with |X| ≤ [`ABYSS_LIMIT`].
pub fn find_abyss(g: &Graph, x: &VertexSet, sigma: usize, theta: usize) -> Result<Option<Abyss>> {
    find_abyss_with_limit(g, x, sigma, theta, ABYSS_LIMIT)
}

/// Exhaustive search for a (σ,θ)-X-abyss (σ ≤ 2, host at most 64
/// vertices). Every connected piece is tried at the intermediate levels;
/// at the last level a whole component of the layer is taken, which loses
/// nothing because a larger connected piece keeps any far pair.
pub fn find_abyss_with_limit(g: &Graph, x: &VertexSet, sigma: usize, theta: usize, limit: usize) -> Result<Option<Abyss>> {
    x.check_in(g.n())?;
    size_limit("σ", sigma, 2)?;
    size_limit("|X|", x.len(), limit.min(24))?;
    size_limit("host vertex count", g.n(), 64)?;
    let search = Search {
        adj: g.adjacency_masks(),
        dist: g.all_distances(),
        sigma,
        theta,
    };
    let found = if sigma == 0 {
        g.components_of(x).into_iter().find_map(|c| search.level(0, c.to_mask()))
    } else {
        connected_submasks(&search.adj, x.to_mask()).into_iter().find_map(|m| search.level(0, m))
    };
    Ok(found.map(|(vertices, radii, sets, base)| Abyss {
        x: x.clone(),
        sigma,
        theta,
        vertices,
        base: VertexSet::from_mask(base),
        levels: radii
            .into_iter()
            .zip(sets)
            .map(|(radius, s)| AbyssLevel {
                radius,
                set: VertexSet::from_mask(s),
            })
            .collect(),
    }))
}

type Found = (Vec<usize>, Vec<usize>, Vec<u64>, u64);

struct Search {
    adj: Vec<u64>,
    dist: Vec<Vec<Option<usize>>>,
    sigma: usize,
    theta: usize,
}

impl Search {
    fn far(&self, piece: u64) -> Option<(usize, usize)> {
        let set: Vec<usize> = mask_iter(piece).collect();
        far_pair(&self.dist, &set, self.theta)
    }

    /// Completes an abyss whose `i`-th piece is `piece`.
    fn level(&self, i: usize, piece: u64) -> Option<Found> {
        // Every later piece, and with it the far pair, sits inside this one.
        let (a, b) = self.far(piece)?;
        if i == self.sigma {
            return Some((vec![a, b], Vec::new(), Vec::new(), piece));
        }
        for centre in mask_iter(piece) {
            let layers = bfs_layers(&self.adj, centre, piece);
            for (k, &layer) in layers.iter().enumerate().skip(1) {
                let candidates = if i + 1 == self.sigma {
                    mask_components(&self.adj, layer)
                } else {
                    connected_submasks(&self.adj, layer)
                };
                for next in candidates {
                    if let Some((mut vs, mut radii, mut sets, inner)) = self.level(i + 1, next) {
                        vs.insert(0, centre);
                        radii.insert(0, k - 1);
                        sets.insert(0, inner);
                        return Some((vs, radii, sets, piece));
                    }
                }
            }
        }
        None
    }
}

fn bfs_layers(adj: &[u64], start: usize, within: u64) -> Vec<u64> {
    let mut seen = 1u64 << start;
    let mut layers = vec![seen];
    loop {
        let frontier = *layers.last().unwrap();
        let next = mask_iter(frontier).fold(0u64, |m, v| m | adj[v]) & within & !seen;
        if next == 0 {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

fn mask_components(adj: &[u64], mut mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while mask != 0 {
        let start = mask.trailing_zeros() as usize;
        let comp = bfs_layers(adj, start, mask).into_iter().fold(0, |m, l| m | l);
        out.push(comp);
        mask &= !comp;
    }
    out
}

fn is_connected_mask(adj: &[u64], mask: u64) -> bool {
    mask != 0 && mask_components(adj, mask).len() == 1
}

/// Nonempty connected submasks, in increasing numeric order.
fn connected_submasks(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = mask;
    while s != 0 {
        if is_connected_mask(adj, s) {
            out.push(s);
        }
        s = (s - 1) & mask;
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::verify_coloring;
    use crate::generators::{cycle, path};

    fn all(g: &Graph) -> VertexSet {
        VertexSet::new((0..g.n()).collect())
    }

    #[test]
    fn far_ends_of_a_path() {
        let p = path(6).unwrap();
        let a = find_abyss(&p, &all(&p), 0, 5).unwrap().unwrap();
        assert_eq!(a.vertices, vec![0, 5]);
        assert_eq!(a.validate(&p), Ok(()));
        assert!(find_abyss(&p, &all(&p), 0, 6).unwrap().is_none());
    }

    #[test]
    fn small_components_give_one_class() {
        let g = path(3).unwrap().disjoint_union(&cycle(4).unwrap());
        assert!(find_abyss(&g, &all(&g), 0, 3).unwrap().is_none());
        match abyss_free_coloring(&g, &all(&g), 0, 3).unwrap() {
            ColoringOutcome::Coloring(c) => {
                assert_eq!(c.class_count(), 1);
                assert!(verify_coloring(&g, &c).is_ok());
            }
            ColoringOutcome::Abyss(_) => panic!("no abyss expected"),
        }
    }

    #[test]
    fn long_path_two_classes() {
        let p = path(12).unwrap();
        let ColoringOutcome::Coloring(c) = abyss_free_coloring(&p, &all(&p), 1, 3).unwrap() else {
            panic!("a path has no (1,3)-abyss");
        };
        assert_eq!(c.class_count(), 2);
        let comps = verify_coloring(&p, &c).unwrap();
        assert!(comps.iter().all(|s| s.vertices.len() == 1));
    }

    #[test]
    fn fan_layer_is_far_at_two() {
        // Hub 0 joined to every vertex of the path 1..=6.
        let mut edges: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
        edges.extend((1..6).map(|v| (v, v + 1)));
        let g = Graph::from_edges(7, &edges).unwrap();
        let ColoringOutcome::Abyss(a) = abyss_free_coloring(&g, &all(&g), 1, 2).unwrap() else {
            panic!("expected an abyss");
        };
        assert_eq!(a.vertices[0], 0);
        assert_eq!(a.levels[0].radius, 0);
        assert_eq!(a.validate(&g), Ok(()));
        assert!(find_abyss(&g, &all(&g), 1, 3).unwrap().is_none());
    }

    #[test]
    fn search_agrees_with_colouring() {
        for seed in 0..40 {
            let g = crate::generators::random_graph(9, 1, 4, seed).unwrap();
            let x = all(&g);
            for sigma in 0..=2 {
                for theta in 1..=4 {
                    let found = find_abyss(&g, &x, sigma, theta).unwrap();
                    if let Some(a) = &found {
                        assert_eq!(a.validate(&g), Ok(()));
                    }
                    match abyss_free_coloring(&g, &x, sigma, theta).unwrap() {
                        // Only one direction holds: a failed colouring
                        // means some abyss exists.
                        ColoringOutcome::Coloring(c) => {
                            assert!(verify_coloring(&g, &c).is_ok());
                        }
                        ColoringOutcome::Abyss(a) => {
                            assert_eq!(a.validate(&g), Ok(()));
                            assert!(found.is_some());
                        }
                    }
                }
            }
        }
    }
}
