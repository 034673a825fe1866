//! Rooted trees living inside a host id space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rooted tree whose vertices are ids of some host graph on `n_ids`
/// vertices. Vertices outside the tree are simply absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct RootedTree {
    n_ids: usize,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    n: usize,
    root: usize,
    /// `[child, parent]` pairs.
    parent: Vec<[usize; 2]>,
}

impl TryFrom<TreeRepr> for RootedTree {
    type Error = Error;
    fn try_from(r: TreeRepr) -> Result<RootedTree> {
        let pairs: Vec<(usize, usize)> = r.parent.iter().map(|p| (p[0], p[1])).collect();
        RootedTree::from_parents(r.n, r.root, &pairs)
    }
}

impl From<RootedTree> for TreeRepr {
    fn from(t: RootedTree) -> TreeRepr {
        TreeRepr {
            n: t.n_ids,
            root: t.root,
            parent: t.edges().into_iter().map(|(c, p)| [c, p]).collect(),
        }
    }
}

impl RootedTree {
    /// Builds a tree from `(child, parent)` pairs. Every non-root vertex must
    /// appear exactly once as a child and reach the root.
    pub fn from_parents(n_ids: usize, root: usize, pairs: &[(usize, usize)]) -> Result<RootedTree> {
        if root >= n_ids {
            return Err(Error::InvalidVertex {
                vertex: root,
                n: n_ids,
            });
        }
        let mut parent = vec![None; n_ids];
        let mut member = vec![false; n_ids];
        member[root] = true;
        for &(c, p) in pairs {
            for w in [c, p] {
                if w >= n_ids {
                    return Err(Error::InvalidVertex { vertex: w, n: n_ids });
                }
            }
            if c == root || parent[c].is_some() || c == p {
                return Err(Error::InvalidParameter(format!(
                    "vertex {c} has an invalid or repeated parent"
                )));
            }
            parent[c] = Some(p);
            member[c] = true;
        }
        let mut children = vec![Vec::new(); n_ids];
        for &(c, p) in pairs {
            if !member[p] {
                return Err(Error::InvalidParameter(format!(
                    "parent {p} of {c} is not in the tree"
                )));
            }
            children[p].push(c);
        }
        for list in children.iter_mut() {
            list.sort_unstable();
        }
        let mut depth = vec![0; n_ids];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                order.push(c);
            }
        }
        if order.len() != pairs.len() + 1 {
            return Err(Error::InvalidParameter(
                "parent map contains a cycle or a vertex that does not reach the root".into(),
            ));
        }
        order.sort_unstable();
        Ok(RootedTree {
            n_ids,
            root,
            parent,
            children,
            depth,
            vertices: order,
        })
    }

    /// Roots the tree `g[vertices]` at `root`; `g` restricted to the given
    /// vertices must be a tree.
    pub fn from_graph(g: &Graph, root: usize, vertices: &[usize]) -> Result<RootedTree> {
        let mut member = vec![false; g.n()];
        for &v in vertices {
            g.check_vertex(v)?;
            member[v] = true;
        }
        g.check_vertex(root)?;
        let mut seen = vec![false; g.n()];
        seen[root] = true;
        let mut pairs = Vec::new();
        let mut queue = vec![root];
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            i += 1;
            for &w in g.neighbors(v) {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    pairs.push((w, v));
                    queue.push(w);
                }
            }
        }
        let distinct = {
            let mut v = vertices.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        if queue.len() != distinct {
            return Err(Error::InvalidParameter("vertex set is not connected".into()));
        }
        let edges_inside = vertices
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| member[w]).count())
            .sum::<usize>()
            / 2;
        if edges_inside != distinct - 1 {
            return Err(Error::InvalidParameter("vertex set induces a cycle".into()));
        }
        RootedTree::from_parents(g.n(), root, &pairs)
    }

    pub fn n_ids(&self) -> usize {
        self.n_ids
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Tree vertices in ascending order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n_ids && (v == self.root || self.parent[v].is_some())
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Largest depth of a vertex.
    pub fn height(&self) -> usize {
        self.vertices.iter().map(|&v| self.depth[v]).max().unwrap_or(0)
    }

    /// The `i`-ancestor of `v` (`v` itself for `i = 0`).
    pub fn ancestor(&self, v: usize, i: usize) -> Option<usize> {
        let mut x = v;
        for _ in 0..i {
            x = self.parent[x]?;
        }
        Some(x)
    }

    /// Vertices at depth `d`, ascending.
    pub fn level(&self, d: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.depth[v] == d)
            .collect()
    }

    /// `(child, parent)` pairs sorted by child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .filter_map(|&v| self.parent[v].map(|p| (v, p)))
            .collect()
    }

    /// Vertices of the subtree rooted at `v`, ascending.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            out.extend_from_slice(&self.children[x]);
        }
        out.sort_unstable();
        out
    }

    /// The tree as a graph on the host id space.
    pub fn to_graph(&self) -> Graph {
        let e: Vec<(usize, usize)> = self.edges();
        Graph::from_edges(self.n_ids, &e).expect("tree edges are simple")
    }

    /// Whether every tree edge is an edge of `g`.
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        g.n() == self.n_ids && self.edges().iter().all(|&(c, p)| g.has_edge(c, p))
    }

    /// Whether the tree is (δ,ρ)-regular: all vertices within depth ρ and
    /// every vertex above depth ρ has exactly δ children.
    pub fn is_regular(&self, delta: usize, rho: usize) -> bool {
        self.vertices.iter().all(|&v| {
            let d = self.depth[v];
            d <= rho && (d == rho || self.children[v].len() == delta)
        })
    }

    /// `(δ, ρ)` if the tree is (δ,ρ)-regular for some δ (δ = 0 for a
    /// single vertex).
    pub fn regularity(&self) -> Option<(usize, usize)> {
        let rho = self.height();
        let delta = if rho == 0 { 0 } else { self.children[self.root].len() };
        self.is_regular(delta, rho).then_some((delta, rho))
    }

    /// Whether `self` is a rooted subtree of `other`: same root and every
    /// edge of `self` is an edge of `other`.
    pub fn is_rooted_subtree_of(&self, other: &RootedTree) -> bool {
        self.n_ids == other.n_ids
            && self.root == other.root
            && self.edges().iter().all(|&(c, p)| other.parent(c) == Some(p))
    }

    /// Whether each parent in `self` is a proper ancestor in `other`. The
    /// root of `self` may be any vertex of `other`.
    pub fn is_ancestor_subtree_of(&self, other: &RootedTree) -> bool {
        self.n_ids == other.n_ids
            && other.contains(self.root)
            && self.edges().iter().all(|&(c, p)| {
                other.contains(c)
                    && other.depth(c) > other.depth(p)
                    && other.ancestor(c, other.depth(c) - other.depth(p)) == Some(p)
            })
    }

    /// Keeps the vertices for which `keep` holds; the kept set must contain
    /// the root and be closed under taking parents.
    pub fn restrict(&self, keep: &[bool]) -> Result<RootedTree> {
        if !keep[self.root] {
            return Err(Error::InvalidParameter("restriction drops the root".into()));
        }
        let pairs: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(c, _)| keep[c])
            .collect();
        RootedTree::from_parents(self.n_ids, self.root, &pairs)
    }

    /// Top-down selection: keeps the root and, for each kept vertex above
    /// depth `rho`, the first `delta` children in ascending order.
    pub fn first_children(&self, delta: usize, rho: usize) -> Result<RootedTree> {
        let mut pairs = Vec::new();
        let mut frontier = vec![self.root];
        for _ in 0..rho {
            let mut next = Vec::new();
            for &v in &frontier {
                let ch = &self.children[v];
                if ch.len() < delta {
                    return Err(Error::Precondition(format!(
                        "vertex {v} has {} children, fewer than {delta}",
                        ch.len()
                    )));
                }
                for &c in &ch[..delta] {
                    pairs.push((c, v));
                    next.push(c);
                }
            }
            frontier = next;
        }
        RootedTree::from_parents(self.n_ids, self.root, &pairs)
    }
}
