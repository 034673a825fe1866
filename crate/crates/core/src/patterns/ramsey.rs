//! Checks of Ramsey-type statements on concrete graphs, and brute-force
//! searches for monochromatic structures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{size_limit, Error, Result};
use crate::graph::{mask_iter, Graph};

use super::cliques::{has_clique, max_stable_set_with_limit};

/// Hosts above this size are reported as inapplicable by the statement
/// checks.
pub const STATEMENT_HOST_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum StatementCheck {
    Pass { stability_number: usize },
    Inapplicable { reason: String },
    Counterexample { stability_number: usize, required: usize },
}

impl StatementCheck {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, StatementCheck::Counterexample { .. })
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn complement_masks(g: &Graph) -> Vec<u64> {
    let all = full_mask(g.n());
    g.adjacency_masks()
        .iter()
        .enumerate()
        .map(|(v, &m)| !m & all & !(1u64 << v))
        .collect()
}

/// Whether `g` has a clique on `t` vertices.
pub fn has_clique_of_size(g: &Graph, t: usize) -> Result<bool> {
    size_limit("vertex count", g.n(), 64)?;
    Ok(has_clique(&g.adjacency_masks(), full_mask(g.n()), t))
}

/// Whether `g` has an induced K_{s,s}: two disjoint stable `s`-sets,
/// complete to each other.
pub fn has_induced_kss(g: &Graph, s: usize) -> Result<bool> {
    size_limit("vertex count", g.n(), 64)?;
    let adj = g.adjacency_masks();
    let co = complement_masks(g);
    Ok(kss_search(&adj, g.n(), s, &|cand| has_clique(&co, cand, s), Some(&co)))
}

/// Whether `g` has K_{s,s} as a (not necessarily induced) subgraph.
pub fn has_kss_subgraph(g: &Graph, s: usize) -> Result<bool> {
    size_limit("vertex count", g.n(), 64)?;
    let adj = g.adjacency_masks();
    Ok(kss_search(&adj, g.n(), s, &|cand| cand.count_ones() as usize >= s, None))
}

/// Tries every `s`-set `A` (stable when `stable` holds the complement
/// masks) and asks `finish` about the common neighbourhood of `A`.
fn kss_search(adj: &[u64], n: usize, s: usize, finish: &dyn Fn(u64) -> bool, stable: Option<&[u64]>) -> bool {
    if s == 0 {
        return true;
    }
    fn go(
        adj: &[u64],
        n: usize,
        left: usize,
        start: usize,
        common: u64,
        allowed: u64,
        finish: &dyn Fn(u64) -> bool,
        stable: Option<&[u64]>,
    ) -> bool {
        if left == 0 {
            return finish(common);
        }
        for v in start..n {
            if allowed >> v & 1 == 0 {
                continue;
            }
            let next_common = common & adj[v];
            if (next_common.count_ones() as usize) < 1 {
                continue;
            }
            let next_allowed = match stable {
                Some(co) => allowed & co[v],
                None => allowed,
            };
            if go(adj, n, left - 1, v + 1, next_common, next_allowed, finish, stable) {
                return true;
            }
        }
        false
    }
    go(adj, n, s, 0, full_mask(n), full_mask(n), finish, stable)
}

fn stability(g: &Graph) -> usize {
    max_stable_set_with_limit(g, STATEMENT_HOST_LIMIT)
        .expect("size checked by caller")
        .size
}

/// `t^(alpha-1)` vertices and no `K_t` force a stable set of size `alpha`.
pub fn ramsey_stable_set_check(g: &Graph, t: usize, alpha: usize) -> StatementCheck {
    if g.n() > STATEMENT_HOST_LIMIT {
        return StatementCheck::Inapplicable {
            reason: format!("host has {} vertices, above {STATEMENT_HOST_LIMIT}", g.n()),
        };
    }
    if alpha == 0 {
        return StatementCheck::Pass {
            stability_number: stability(g),
        };
    }
    let needed = (t as u128).checked_pow(alpha as u32 - 1);
    if needed.is_none_or(|k| (g.n() as u128) < k) {
        return StatementCheck::Inapplicable {
            reason: format!("fewer than {t}^{} vertices", alpha - 1),
        };
    }
    if has_clique(&g.adjacency_masks(), full_mask(g.n()), t) {
        return StatementCheck::Inapplicable {
            reason: format!("contains K_{t}"),
        };
    }
    verdict(stability(g), alpha)
}

/// `alpha^s * t^(s-1)` vertices, no `K_t` and no induced `K_{s,s}` force a
/// stable set of size `alpha`.
pub fn ehkss_check(g: &Graph, s: usize, t: usize, alpha: usize) -> StatementCheck {
    if g.n() > STATEMENT_HOST_LIMIT {
        return StatementCheck::Inapplicable {
            reason: format!("host has {} vertices, above {STATEMENT_HOST_LIMIT}", g.n()),
        };
    }
    if s == 0 {
        return StatementCheck::Inapplicable {
            reason: "s must be positive".into(),
        };
    }
    let needed = (alpha as u128)
        .checked_pow(s as u32)
        .and_then(|a| (t as u128).checked_pow(s as u32 - 1).and_then(|b| a.checked_mul(b)));
    if needed.is_none_or(|k| (g.n() as u128) < k) {
        return StatementCheck::Inapplicable {
            reason: format!("fewer than {alpha}^{s}*{t}^{} vertices", s - 1),
        };
    }
    if has_clique(&g.adjacency_masks(), full_mask(g.n()), t) {
        return StatementCheck::Inapplicable {
            reason: format!("contains K_{t}"),
        };
    }
    if has_induced_kss(g, s).expect("size checked") {
        return StatementCheck::Inapplicable {
            reason: format!("contains an induced K_{{{s},{s}}}"),
        };
    }
    verdict(stability(g), alpha)
}

fn verdict(stability_number: usize, required: usize) -> StatementCheck {
    if stability_number >= required {
        StatementCheck::Pass { stability_number }
    } else {
        StatementCheck::Counterexample {
            stability_number,
            required,
        }
    }
}

/// Random graph on `n` vertices with no `K_t` (and, with `avoid_c4`, no
/// 4-cycle either). Pairs are visited in a seeded random order and each
/// admissible pair is kept with probability `keep_num / keep_den`.
pub fn random_restricted_graph(n: usize, t: usize, avoid_c4: bool, keep_num: u32, keep_den: u32, seed: u64) -> Result<Graph> {
    size_limit("vertex count", n, 64)?;
    if keep_den == 0 || keep_num > keep_den {
        return Err(Error::InvalidParameter("keep probability must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.gen_range(0..keep_den) >= keep_num {
            continue;
        }
        let common = adj[u] & adj[v];
        // A new edge uv closes a K_t exactly when N(u) ∩ N(v) holds a K_{t-2}.
        if t >= 2 && has_clique(&adj, common, t - 2) {
            continue;
        }
        if avoid_c4 && (common != 0 || closes_four_cycle(&adj, u, v)) {
            continue;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Whether some neighbour of `u` and some neighbour of `v` are adjacent.
fn closes_four_cycle(adj: &[u64], u: usize, v: usize) -> bool {
    mask_iter(adj[u] & !(1u64 << v)).any(|a| adj[a] & adj[v] & !(1u64 << u) != 0)
}

/// Which monochromatic structure to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum MonochromaticMode {
    /// A `t`-subset all of whose `s`-subsets get one of `r` colours.
    Subset { r: usize, s: usize, t: usize },
    /// `t`-subsets of each of `s` factors whose product gets one colour.
    Product { r: usize, s: usize, t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromaticWitness {
    pub colour: usize,
    /// One part in subset mode, one part per factor in product mode.
    pub parts: Vec<Vec<usize>>,
}

/// Largest universe (or factor) size for [`monochromatic_search`].
pub const MONOCHROMATIC_LIMIT: usize = 12;

/// Exhaustive search. `universe` lists the ground set sizes: one entry in
/// subset mode, `s` entries in product mode. The colouring receives a
/// sorted `s`-subset (subset mode) or a tuple with one element per factor
/// (product mode) and must return a colour below `r`.
pub fn monochromatic_search(
    mode: MonochromaticMode,
    universe: &[usize],
    colour: &dyn Fn(&[usize]) -> usize,
) -> Result<Option<MonochromaticWitness>> {
    let (r, s, t) = match mode {
        MonochromaticMode::Subset { r, s, t } | MonochromaticMode::Product { r, s, t } => (r, s, t),
    };
    size_limit("s", s, 3)?;
    for &u in universe {
        size_limit("universe size", u, MONOCHROMATIC_LIMIT)?;
    }
    if r == 0 {
        return Err(Error::InvalidParameter("at least one colour is needed".into()));
    }
    let checked = |x: &[usize]| -> Result<usize> {
        let c = colour(x);
        if c >= r {
            return Err(Error::InvalidParameter(format!("colour {c} is not below {r}")));
        }
        Ok(c)
    };
    match mode {
        MonochromaticMode::Subset { .. } => {
            if universe.len() != 1 {
                return Err(Error::InvalidParameter("subset mode takes one universe".into()));
            }
            subset_search(universe[0], s, t, r, &checked)
        }
        MonochromaticMode::Product { .. } => {
            if universe.len() != s {
                return Err(Error::InvalidParameter(format!("product mode takes {s} factors")));
            }
            product_search(universe, t, r, &checked)
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

fn subset_search(
    n: usize,
    s: usize,
    t: usize,
    r: usize,
    colour: &dyn Fn(&[usize]) -> Result<usize>,
) -> Result<Option<MonochromaticWitness>> {
    if t > n {
        return Ok(None);
    }
    if t < s {
        // No s-subsets to colour: any t-subset works with any colour.
        return Ok(Some(MonochromaticWitness {
            colour: 0,
            parts: vec![(0..t).collect()],
        }));
    }
    if s == 0 {
        return Ok(Some(MonochromaticWitness {
            colour: colour(&[])?,
            parts: vec![(0..t).collect()],
        }));
    }
    let table: std::collections::HashMap<Vec<usize>, usize> = subsets(n, s)
        .into_iter()
        .map(|x| colour(&x).map(|c| (x, c)))
        .collect::<Result<_>>()?;
    for c in 0..r {
        let mut cur = Vec::with_capacity(t);
        if grow_subset(n, s, t, c, &table, 0, &mut cur) {
            return Ok(Some(MonochromaticWitness {
                colour: c,
                parts: vec![cur],
            }));
        }
    }
    Ok(None)
}

/// Adds elements in increasing order, checking the new `s`-subsets that
/// contain the latest element.
fn grow_subset(
    n: usize,
    s: usize,
    t: usize,
    c: usize,
    table: &std::collections::HashMap<Vec<usize>, usize>,
    start: usize,
    cur: &mut Vec<usize>,
) -> bool {
    if cur.len() == t {
        return true;
    }
    for v in start..n {
        if n - v < t - cur.len() {
            break;
        }
        let ok = subsets(cur.len(), s - 1).iter().all(|idx| {
            let mut key: Vec<usize> = idx.iter().map(|&i| cur[i]).collect();
            key.push(v);
            table[&key] == c
        });
        if !ok {
            continue;
        }
        cur.push(v);
        if grow_subset(n, s, t, c, table, v + 1, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

fn product_search(
    sizes: &[usize],
    t: usize,
    r: usize,
    colour: &dyn Fn(&[usize]) -> Result<usize>,
) -> Result<Option<MonochromaticWitness>> {
    if sizes.iter().any(|&a| a < t) {
        return Ok(None);
    }
    if sizes.is_empty() {
        return Ok(Some(MonochromaticWitness {
            colour: 0,
            parts: Vec::new(),
        }));
    }
    for c in 0..r {
        let mut parts = Vec::new();
        if choose_factor(sizes, t, c, colour, &mut parts)? {
            return Ok(Some(MonochromaticWitness { colour: c, parts }));
        }
    }
    Ok(None)
}

/// Picks parts factor by factor; the last factor keeps only elements whose
/// every tuple with the earlier parts has colour `c`.
fn choose_factor(
    sizes: &[usize],
    t: usize,
    c: usize,
    colour: &dyn Fn(&[usize]) -> Result<usize>,
    parts: &mut Vec<Vec<usize>>,
) -> Result<bool> {
    let j = parts.len();
    if j + 1 == sizes.len() {
        let mut good = Vec::new();
        for x in 0..sizes[j] {
            if all_tuples(parts, x, c, colour)? {
                good.push(x);
                if good.len() == t {
                    parts.push(good);
                    return Ok(true);
                }
            }
        }
        return Ok(false);
    }
    for b in subsets(sizes[j], t) {
        parts.push(b);
        if choose_factor(sizes, t, c, colour, parts)? {
            return Ok(true);
        }
        parts.pop();
    }
    Ok(false)
}

fn all_tuples(parts: &[Vec<usize>], last: usize, c: usize, colour: &dyn Fn(&[usize]) -> Result<usize>) -> Result<bool> {
    let mut idx = vec![0usize; parts.len()];
    let mut tuple = vec![0usize; parts.len() + 1];
    tuple[parts.len()] = last;
    loop {
        for (k, p) in parts.iter().enumerate() {
            tuple[k] = p[idx[k]];
        }
        if colour(&tuple)? != c {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == parts.len() {
                return Ok(true);
            }
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle};

    #[test]
    fn small_statements() {
        let edgeless = Graph::empty(4);
        assert_eq!(ramsey_stable_set_check(&edgeless, 2, 3), StatementCheck::Pass { stability_number: 4 });
        let p3 = crate::generators::path(3).unwrap();
        assert!(matches!(ramsey_stable_set_check(&p3, 3, 2), StatementCheck::Pass { .. }));
        let tri = crate::generators::complete(3).unwrap();
        assert!(matches!(ramsey_stable_set_check(&tri, 3, 2), StatementCheck::Inapplicable { .. }));
        assert!(matches!(ehkss_check(&Graph::empty(3), 1, 2, 3), StatementCheck::Pass { .. }));
    }

    #[test]
    fn kss_predicates() {
        let c4 = cycle(4).unwrap();
        assert!(has_induced_kss(&c4, 2).unwrap());
        assert!(has_kss_subgraph(&c4, 2).unwrap());
        let k4 = crate::generators::complete(4).unwrap();
        assert!(!has_induced_kss(&k4, 2).unwrap());
        assert!(has_kss_subgraph(&k4, 2).unwrap());
        assert!(has_induced_kss(&complete_bipartite(3, 3).unwrap(), 3).unwrap());
        assert!(!has_induced_kss(&cycle(5).unwrap(), 2).unwrap());
    }

    #[test]
    fn restricted_generator() {
        for seed in 0..20 {
            let g = random_restricted_graph(20, 3, true, 1, 1, seed).unwrap();
            assert!(!has_clique_of_size(&g, 3).unwrap());
            assert!(!has_kss_subgraph(&g, 2).unwrap());
        }
    }

    #[test]
    fn pigeonhole_and_constant() {
        let w = monochromatic_search(MonochromaticMode::Subset { r: 2, s: 1, t: 3 }, &[5], &|x| x[0] % 2)
            .unwrap()
            .unwrap();
        assert_eq!(w, MonochromaticWitness { colour: 0, parts: vec![vec![0, 2, 4]] });
        let w = monochromatic_search(MonochromaticMode::Product { r: 1, s: 2, t: 2 }, &[3, 3], &|_| 0)
            .unwrap()
            .unwrap();
        assert_eq!(w.parts, vec![vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn product_colouring() {
        // Colour (a, b) by whether a == b: any two 2-sets share or avoid
        // the diagonal, and disjoint parts give colour 0.
        let w = monochromatic_search(MonochromaticMode::Product { r: 2, s: 2, t: 2 }, &[4, 4], &|x| (x[0] == x[1]) as usize)
            .unwrap()
            .unwrap();
        assert_eq!(w.colour, 0);
        assert!(w.parts[0].iter().all(|a| !w.parts[1].contains(a)));
    }
}
