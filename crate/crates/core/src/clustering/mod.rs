//! Colourings whose monochromatic components are small in host distance,
//! the nested far-pair structures (abysses) that obstruct them, and two
//! tools for induced models of bipartite patterns: shrinking one side to
//! single vertices and lifting a model out of a torso.

mod abyss;
mod colouring;
mod models;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

pub use abyss::{abyss_free_coloring, find_abyss, find_abyss_with_limit, Abyss, AbyssLevel, ColoringOutcome, ABYSS_LIMIT};
pub use colouring::{
    component_intersection_graph, edge_coloring_from_star, find_star_pair_coloring, STAR_PAIR_LIMIT,
};
pub use models::{lift_model_via_torso, minimize_model_side, Minimization};

/// The colour classes of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ColoringClasses {
    /// A partition of `domain` (all of V(G), or a subset X for colourings
    /// of G[X]).
    Vertex { domain: VertexSet, classes: Vec<VertexSet> },
    /// A partition of E(G); edges are stored as `(u, v)` with `u < v`.
    Edge { classes: Vec<Vec<(usize, usize)>> },
}

/// What the certificate claims about every monochromatic component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "bound", content = "value")]
pub enum ColoringBound {
    /// Host-distance diameter below the value.
    DiameterBelow(usize),
    /// Fewer vertices than the value.
    ClusteringBelow(usize),
    /// Stable vertex classes, or matchings for edge classes.
    Proper,
    /// Proper, and any two vertex classes induce a star forest.
    StarPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub classes: ColoringClasses,
    pub bound: ColoringBound,
}

/// One monochromatic component as recomputed by the checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub class: usize,
    pub vertices: VertexSet,
    /// Diameter measured in the host; `None` never occurs for a connected
    /// component but is kept for uniformity with `Graph::set_diameter`.
    pub diameter: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[serde(rename_all = "kebab-case", tag = "violation")]
pub enum ColoringViolation {
    #[error("classes do not partition the domain: {0}")]
    NotPartition(String),
    #[error("component {vertices:?} of class {class} has diameter {diameter:?}, bound {bound}")]
    Diameter {
        class: usize,
        vertices: VertexSet,
        diameter: Option<usize>,
        bound: usize,
    },
    #[error("component {vertices:?} of class {class} has {size} vertices, bound {bound}")]
    Clustering {
        class: usize,
        vertices: VertexSet,
        size: usize,
        bound: usize,
    },
    #[error("classes {a} and {b} induce a component {vertices:?} that is not a star")]
    NotStar { a: usize, b: usize, vertices: VertexSet },
    #[error("the star-pair bound applies to vertex colourings only")]
    WrongKind,
    #[error("component {vertices:?} has {size} vertices although its diameter is below {eta} and the degree is at most {max_degree}")]
    DegreeDiameter {
        vertices: VertexSet,
        size: usize,
        max_degree: usize,
        eta: usize,
    },
}

impl ColoringCertificate {
    pub fn class_count(&self) -> usize {
        match &self.classes {
            ColoringClasses::Vertex { classes, .. } => classes.len(),
            ColoringClasses::Edge { classes } => classes.len(),
        }
    }
}

/// Checks that the classes partition their domain and returns every
/// monochromatic component with its host diameter.
fn components(g: &Graph, c: &ColoringCertificate) -> Result<Vec<ComponentSummary>, ColoringViolation> {
    let mut out = Vec::new();
    match &c.classes {
        ColoringClasses::Vertex { domain, classes } => {
            if let Some(v) = domain.iter().find(|&v| v >= g.n()) {
                return Err(ColoringViolation::NotPartition(format!("vertex {v} is not in the host")));
            }
            let mut owner = vec![None; g.n()];
            for (i, class) in classes.iter().enumerate() {
                for v in class.iter() {
                    if !domain.contains(v) {
                        return Err(ColoringViolation::NotPartition(format!("vertex {v} is outside the domain")));
                    }
                    if let Some(j) = owner[v] {
                        return Err(ColoringViolation::NotPartition(format!("vertex {v} is in classes {j} and {i}")));
                    }
                    owner[v] = Some(i);
                }
            }
            if let Some(v) = domain.iter().find(|&v| owner[v].is_none()) {
                return Err(ColoringViolation::NotPartition(format!("vertex {v} has no class")));
            }
            for (i, class) in classes.iter().enumerate() {
                for comp in g.components_of(class) {
                    let diameter = g.set_diameter(&comp);
                    out.push(ComponentSummary {
                        class: i,
                        vertices: comp,
                        diameter,
                    });
                }
            }
        }
        ColoringClasses::Edge { classes } => {
            let mut owner = std::collections::HashMap::new();
            for (i, class) in classes.iter().enumerate() {
                for &(u, v) in class {
                    if u >= v || v >= g.n() || !g.has_edge(u, v) {
                        return Err(ColoringViolation::NotPartition(format!("({u}, {v}) is not an edge of the host")));
                    }
                    if let Some(j) = owner.insert((u, v), i) {
                        return Err(ColoringViolation::NotPartition(format!("edge {u}-{v} is in classes {j} and {i}")));
                    }
                }
            }
            if owner.len() != g.m() {
                return Err(ColoringViolation::NotPartition(format!(
                    "{} of {} edges are coloured",
                    owner.len(),
                    g.m()
                )));
            }
            for (i, class) in classes.iter().enumerate() {
                let spanning = Graph::from_edges(g.n(), class).map_err(|e| ColoringViolation::NotPartition(e.to_string()))?;
                for comp in spanning.components() {
                    let diameter = g.set_diameter(&comp);
                    out.push(ComponentSummary {
                        class: i,
                        vertices: comp,
                        diameter,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn is_star(g: &Graph, comp: &VertexSet) -> bool {
    let k = comp.len();
    if k <= 2 {
        return true;
    }
    let degrees: Vec<usize> = comp
        .iter()
        .map(|v| g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count())
        .collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    edges == k - 1 && degrees.iter().any(|&d| d == k - 1)
}

/// Recomputes every monochromatic component and checks the claimed bound.
pub fn verify_coloring(g: &Graph, c: &ColoringCertificate) -> Result<Vec<ComponentSummary>, ColoringViolation> {
    let comps = components(g, c)?;
    let below = |s: &ComponentSummary, h: usize| s.diameter.is_some_and(|d| d < h);
    match c.bound {
        ColoringBound::DiameterBelow(h) => {
            if let Some(s) = comps.iter().find(|s| !below(s, h)) {
                return Err(ColoringViolation::Diameter {
                    class: s.class,
                    vertices: s.vertices.clone(),
                    diameter: s.diameter,
                    bound: h,
                });
            }
        }
        ColoringBound::ClusteringBelow(n) => check_sizes(&comps, n)?,
        ColoringBound::Proper => {
            // Stable classes are exactly those of G-diameter below 1; an
            // edge class is a matching when every component has at most
            // two vertices.
            let limit = match c.classes {
                ColoringClasses::Vertex { .. } => 1,
                ColoringClasses::Edge { .. } => 2,
            };
            check_sizes(&comps, limit + 1)?;
        }
        ColoringBound::StarPair => {
            let ColoringClasses::Vertex { classes, .. } = &c.classes else {
                return Err(ColoringViolation::WrongKind);
            };
            check_sizes(&comps, 2)?;
            for a in 0..classes.len() {
                for b in a + 1..classes.len() {
                    let union = classes[a].union(&classes[b]);
                    if let Some(comp) = g.components_of(&union).into_iter().find(|comp| !is_star(g, comp)) {
                        return Err(ColoringViolation::NotStar { a, b, vertices: comp });
                    }
                }
            }
        }
    }
    Ok(comps)
}

fn check_sizes(comps: &[ComponentSummary], n: usize) -> Result<(), ColoringViolation> {
    match comps.iter().find(|s| s.vertices.len() >= n) {
        Some(s) => Err(ColoringViolation::Clustering {
            class: s.class,
            vertices: s.vertices.clone(),
            size: s.vertices.len(),
            bound: n,
        }),
        None => Ok(()),
    }
}

/// Checks that every monochromatic component has fewer than `n_bound`
/// vertices. With `max_degree = Some(Δ)`, `Δ ≥ 2`, a host of maximum
/// degree at most Δ and a certificate claiming diameter below η, also
/// checks that each component has fewer than Δ^η vertices.
pub fn verify_clustering(
    g: &Graph,
    c: &ColoringCertificate,
    n_bound: usize,
    max_degree: Option<usize>,
) -> Result<Vec<ComponentSummary>, ColoringViolation> {
    let comps = verify_coloring(g, c)?;
    check_sizes(&comps, n_bound)?;
    if let (Some(delta), ColoringBound::DiameterBelow(eta)) = (max_degree, c.bound) {
        if delta >= 2 && g.max_degree() <= delta {
            let cap = (delta as u128).checked_pow(eta as u32);
            for s in &comps {
                if cap.is_some_and(|cap| s.vertices.len() as u128 >= cap) {
                    return Err(ColoringViolation::DegreeDiameter {
                        vertices: s.vertices.clone(),
                        size: s.vertices.len(),
                        max_degree: delta,
                        eta,
                    });
                }
            }
        }
    }
    Ok(comps)
}
