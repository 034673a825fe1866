//! Named graph families and seeded random graphs.
//!
//! Numbering conventions:
//! * `complete t`: vertices `0..t`.
//! * `complete_bipartite p q`: sides `0..p` and `p..p+q`.
//! * `path k`: `k` vertices `0 - 1 - … - (k-1)`; `cycle k` closes it.
//! * `binary_tree r`: radius `r`, root 0, children of `v` are `2v+1, 2v+2`.
//! * `grid r`: vertex `(i, j)` is `i*r + j`.
//! * `wall r`: see [`wall_coordinates`].
//! * `regular_rooted_tree δ ρ`: root 0, breadth-first, the children of a
//!   vertex are consecutive ids.
//!
//! Random graphs draw from ChaCha8 seeded with `seed_from_u64(seed)`; pair
//! `u < v` is visited in lexicographic order and kept iff a uniform draw
//! from `0..den` is below `num`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::RootedTree;

/// The families accepted by [`generate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Family {
    Complete { t: usize },
    CompleteBipartite { p: usize, q: usize },
    Path { k: usize },
    Cycle { k: usize },
    BinaryTree { r: usize },
    Grid { r: usize },
    Wall { r: usize },
    RegularRootedTree { delta: usize, rho: usize },
}

/// Builds a member of `family`. Rooted trees come back as their host graph;
/// use [`regular_rooted_tree`] to keep the root.
pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete { t } => complete(t),
        Family::CompleteBipartite { p, q } => complete_bipartite(p, q),
        Family::Path { k } => path(k),
        Family::Cycle { k } => cycle(k),
        Family::BinaryTree { r } => binary_tree(r),
        Family::Grid { r } => grid(r),
        Family::Wall { r } => wall(r),
        Family::RegularRootedTree { delta, rho } => Ok(regular_rooted_tree(delta, rho)?.to_graph()),
    }
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{name} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

pub fn complete(t: usize) -> Result<Graph> {
    at_least("t", t, 1)?;
    let mut e = Vec::new();
    for u in 0..t {
        for v in u + 1..t {
            e.push((u, v));
        }
    }
    Graph::from_edges(t, &e)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    at_least("p", p, 1)?;
    at_least("q", q, 1)?;
    let mut e = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            e.push((u, v));
        }
    }
    Graph::from_edges(p + q, &e)
}

pub fn path(k: usize) -> Result<Graph> {
    at_least("k", k, 1)?;
    let e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &e)
}

pub fn cycle(k: usize) -> Result<Graph> {
    at_least("k", k, 3)?;
    let e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &e)
}

/// The full binary tree of radius `r` (2^(r+1) − 1 vertices).
pub fn binary_tree(r: usize) -> Result<Graph> {
    Ok(binary_rooted_tree(r)?.to_graph())
}

pub fn binary_rooted_tree(r: usize) -> Result<RootedTree> {
    regular_rooted_tree(2, r)
}

pub fn grid(r: usize) -> Result<Graph> {
    at_least("r", r, 1)?;
    let mut e = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if j + 1 < r {
                e.push((i * r + j, i * r + j + 1));
            }
            if i + 1 < r {
                e.push((i * r + j, (i + 1) * r + j));
            }
        }
    }
    Graph::from_edges(r * r, &e)
}

/// Coordinates `(row, column)` of the vertices of the `r`-wall, indexed by
/// vertex id.
///
/// Rows `0..=r` are paths on columns `0..=2r+1`. Between rows `i` and `i+1`
/// there is a vertical edge at every column `j` with `j ≡ i (mod 2)`, which
/// gives `r` bricks (6-cycles) per strip. The two vertices left with degree
/// one, `(0, 2r+1)` and one end of the last row, are removed. Ids follow
/// row-major order of the remaining coordinates. The result has `2r² + 4r`
/// vertices, maximum degree 3, and `r = 1` is the 6-cycle.
pub fn wall_coordinates(r: usize) -> Vec<(usize, usize)> {
    let w = 2 * r + 2;
    let last_removed = if r % 2 == 1 { (r, w - 1) } else { (r, 0) };
    let mut out = Vec::new();
    for i in 0..=r {
        for j in 0..w {
            if (i, j) != (0, w - 1) && (i, j) != last_removed {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn wall(r: usize) -> Result<Graph> {
    at_least("r", r, 1)?;
    let coords = wall_coordinates(r);
    let id = |c: (usize, usize)| coords.binary_search(&c).ok();
    let mut e = Vec::new();
    for (v, &(i, j)) in coords.iter().enumerate() {
        if let Some(w) = id((i, j + 1)) {
            e.push((v, w));
        }
        if i < r && j % 2 == i % 2 {
            if let Some(w) = id((i + 1, j)) {
                e.push((v, w));
            }
        }
    }
    Graph::from_edges(coords.len(), &e)
}

/// The (δ,ρ)-regular rooted tree.
pub fn regular_rooted_tree(delta: usize, rho: usize) -> Result<RootedTree> {
    at_least("delta", delta, 1)?;
    let mut pairs = Vec::new();
    let mut frontier = vec![0usize];
    let mut next_id = 1;
    for _ in 0..rho {
        let mut next = Vec::with_capacity(frontier.len() * delta);
        for &v in &frontier {
            for _ in 0..delta {
                pairs.push((next_id, v));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    RootedTree::from_parents(next_id, 0, &pairs)
}

/// Seeded G(n, num/den).
pub fn random_graph(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameter(format!(
            "edge probability {num}/{den} is not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e)
}

/// The graph whose edge set is given by the bits of `code` over the pairs
/// `u < v` in lexicographic order. Enumerating `code` over `0..2^(n(n-1)/2)`
/// lists every labelled graph on `n` vertices.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut e = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                e.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &e).expect("pairs are distinct")
}

/// Uniform random labelled tree on `n` vertices (random attachment).
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let e: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &e).expect("attachment gives a tree")
}

/// Random chordal graph: each new vertex is joined to a clique grown from
/// a random earlier vertex, so the reverse order eliminates simplicial
/// vertices.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut e = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        for &w in &adj[u] {
            if rng.gen_bool(0.5) && clique.iter().all(|&c| adj[c].contains(&w)) {
                clique.push(w);
            }
        }
        if rng.gen_bool(0.2) {
            continue;
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            e.push((c, v));
        }
    }
    Graph::from_edges(n, &e).expect("each vertex joins distinct earlier vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordal_graphs_have_no_long_induced_cycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_chordal(9, &mut rng);
            for k in 4..=9 {
                let c = cycle(k).unwrap();
                assert!(crate::patterns::find_embedding(&g, &c, true).is_none());
            }
        }
    }

    #[test]
    fn family_sizes() {
        let b = binary_tree(2).unwrap();
        assert_eq!((b.n(), b.m()), (7, 6));
        let g = grid(3).unwrap();
        assert_eq!((g.n(), g.m()), (9, 12));
        let t = regular_rooted_tree(3, 2).unwrap();
        assert_eq!(t.len(), 13);
        assert!(t.is_regular(3, 2));
        assert_eq!(regular_rooted_tree(1, 4).unwrap().len(), 5);
        assert!(complete(0).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn wall_shape() {
        let c6 = wall(1).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!((0..6).all(|v| c6.degree(v) == 2));
        for r in 1..=6 {
            let w = wall(r).unwrap();
            assert_eq!(w.n(), 2 * r * r + 4 * r);
            // (r+1)(2r+1) − 2 horizontal edges and r(r+1) vertical ones.
            assert_eq!(w.m(), (r + 1) * (2 * r + 1) - 2 + r * (r + 1));
            assert!(w.max_degree() <= 3);
            assert!((0..w.n()).all(|v| w.degree(v) >= 2));
            assert!(w.is_connected());
            // Euler: faces = r² bricks + outer face.
            assert_eq!(w.n() + r * r + 1, w.m() + 2);
        }
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(5, 0, 1, 3).unwrap().m(), 0);
        assert_eq!(random_graph(5, 1, 1, 3).unwrap().m(), 10);
        assert_eq!(random_graph(8, 1, 2, 7).unwrap(), random_graph(8, 1, 2, 7).unwrap());
        assert!(random_graph(3, 3, 2, 0).is_err());
    }

    #[test]
    fn codes_enumerate_graphs() {
        assert_eq!(graph_from_code(4, 0).m(), 0);
        assert_eq!(graph_from_code(4, 63).m(), 6);
    }
}
