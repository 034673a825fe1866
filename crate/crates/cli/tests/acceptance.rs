//! Acceptance criteria 1–12, one line each. Runs as a plain binary so the
//! lines are printed by `cargo test` without `--nocapture`.
//!
//! Criteria listed in `EXPECTED_FAILURES` are statements that do not hold
//! as written; they must report FAIL, and the run fails if one passes.

use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use pwbound::bounds::{eval_bound, mainedgecluster_colors, psi, pwtotw, ConstantsConfig};
use pwbound::clustering::{
    abyss_free_coloring, find_abyss, lift_model_via_torso, minimize_model_side, verify_coloring, ColoringOutcome,
};
use pwbound::extraction::{
    branch_induced_extract, color_uniform, long_path_dichotomy, path_induced_extract, path_uniform, planted_host,
    recover_binary_tree, verify_long_path, ExtractionError, PlantedSpec,
};
use pwbound::generators::{
    binary_tree, complete, complete_bipartite, cycle, graph_from_code, grid, random_chordal, random_graph,
    random_tree, regular_rooted_tree, wall,
};
use pwbound::oracle::{
    max_internally_disjoint_induced_paths, pathwidth_by_orderings, stability_number_by_subsets, treewidth_by_orderings,
};
use pwbound::patterns::{
    detect_pattern, detect_pattern_with, ehkss_check, ramsey_stable_set_check, random_restricted_graph, DetectLimits,
    MinorModel, Relation, StatementCheck,
};
use pwbound::separability::{check_separable, digraph_stable_set, Digraph, StableSetOutcome};
use pwbound::widths::{
    check_torso_max, decomposition_from_elimination, exact_pathwidth, exact_pathwidth_with_limit, exact_treewidth,
    is_tight, torso,
};
use pwbound::{Graph, Subdivision, TreeDecomposition, VertexSet};

const EXPECTED_FAILURES: &[usize] = &[8];

type Verdict = Result<String, String>;
type Criterion = (usize, &'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// 1. Exact solvers against the all-orderings oracles.
fn solver_correctness() -> Verdict {
    let check = |g: &Graph| -> Result<(), String> {
        let (pw, pd) = exact_pathwidth(g).map_err(|e| e.to_string())?;
        let (tw, td) = exact_treewidth(g).map_err(|e| e.to_string())?;
        let (opw, otw) = (pathwidth_by_orderings(g), treewidth_by_orderings(g));
        ensure(pw == opw && tw == otw, || format!("{g:?}: pw {pw}/{opw}, tw {tw}/{otw}"))?;
        ensure(pd.width() == pw && pd.validate(g).is_ok(), || format!("{g:?}: bad path decomposition"))?;
        ensure(td.width() == tw && td.validate(g).is_ok(), || format!("{g:?}: bad tree decomposition"))
    };
    let mut exhaustive = 0;
    for n in 1..=6usize {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            check(&graph_from_code(n, code))?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let n = rng.gen_range(7..=10);
        let g = random_graph(n, rng.gen_range(1..=7), 8, rng.gen()).unwrap();
        check(&g)?;
    }
    Ok(format!("{exhaustive} labelled graphs on 1-6 vertices and 500 random graphs on 7-10 vertices agree"))
}

// 2. Widths of cliques and complete bipartite graphs.
fn named_widths() -> Verdict {
    for t in 1..=6 {
        let k = complete(t).unwrap();
        let (pw, tw) = (exact_pathwidth(&k).unwrap().0, exact_treewidth(&k).unwrap().0);
        ensure(pw == t - 1 && tw == t - 1, || format!("K_{t}: pw {pw}, tw {tw}"))?;
    }
    for t in 1..=4 {
        let k = complete_bipartite(t, t).unwrap();
        let (pw, tw) = (exact_pathwidth(&k).unwrap().0, exact_treewidth(&k).unwrap().0);
        ensure(pw == t && tw == t, || format!("K_{t},{t}: pw {pw}, tw {tw}"))?;
    }
    Ok("pw = tw = t-1 on K_1..K_6 and t on K_1,1..K_4,4".into())
}

// 3. Walls contain grids as induced minors.
fn walls_contain_grids() -> Verdict {
    let limits = DetectLimits {
        max_host: 128,
        max_pattern: 9,
        ..DetectLimits::default()
    };
    for r in [2, 3] {
        let host = wall(2 * r - 1).unwrap();
        let pattern = grid(r).unwrap();
        let w = detect_pattern_with(&host, &pattern, Relation::InducedMinor, &limits)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no induced {r}-grid model in the {}-wall", 2 * r - 1))?;
        w.validate(&host, &pattern, Relation::InducedMinor)
            .map_err(|v| format!("r = {r}: {v}"))?;
    }
    Ok("induced 2-grid in the 3-wall and 3-grid in the 5-wall, both validated".into())
}

// 4. Binary trees, their subdivisions and line graphs have large pathwidth.
fn binary_tree_lower_bound() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut seen = Vec::new();
    for r in 1..=4usize {
        let b = binary_tree(r).unwrap();
        let lengths: Vec<usize> = (0..b.m()).map(|_| rng.gen_range(2..=3)).collect();
        let s = b.subdivide(&Subdivision::Proper { lengths }).unwrap();
        let (l, _) = s.line_graph();
        for (name, g) in [("tree", &b), ("subdivision", &s), ("line graph", &l)] {
            let (pw, d) = exact_pathwidth_with_limit(g, 128).map_err(|e| e.to_string())?;
            ensure(d.validate(g).is_ok(), || format!("r = {r} {name}: invalid decomposition"))?;
            ensure(pw >= r.div_ceil(2), || format!("r = {r} {name}: pathwidth {pw} < {}", r.div_ceil(2)))?;
            seen.push(pw);
        }
    }
    Ok(format!("pathwidths {seen:?} (tree, subdivision, line graph for r = 1..4)"))
}

fn check_obstruction(g: &Graph, e: &ExtractionError) -> Result<(), String> {
    match e {
        ExtractionError::CompleteBipartite { left, right } => {
            let (l, r) = (VertexSet::from(&left[..]), VertexSet::from(&right[..]));
            ensure(l.len() == r.len() && l.len() == left.len() && l.is_disjoint(&r), || "bad K_t,t sides".into())?;
            ensure(left.iter().all(|&a| right.iter().all(|&b| g.has_edge(a, b))), || "sides not complete".into())
        }
        ExtractionError::CliqueMinor { model } => {
            let k = complete(model.branch_sets.len()).unwrap();
            model.validate(g, &k).map_err(|v| v.to_string())
        }
        ExtractionError::Stage { source, .. } => check_obstruction(g, source),
        other => Err(other.to_string()),
    }
}

fn small_planted(rng: &mut ChaCha8Rng) -> PlantedSpec {
    PlantedSpec {
        width: 4,
        depth: 4,
        chord_levels: if rng.gen_bool(0.5) { vec![(0, 2)] } else { Vec::new() },
        leaf_chords: false,
        cross_edges: rng.gen_range(0..=2),
        seed: rng.gen(),
    }
}

/// The induced subgraph on `map` is the binary tree of radius 2 with the
/// children of `b` at `2b+1`, `2b+2`.
fn is_induced_b2(g: &Graph, map: &[usize]) -> bool {
    let b2 = binary_tree(2).unwrap();
    map.len() == 7
        && VertexSet::from(map).len() == 7
        && (0..7).all(|i| (i + 1..7).all(|j| g.has_edge(map[i], map[j]) == b2.has_edge(i, j)))
}

// 5. Extraction certificates.
fn extraction_certificates() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let (delta, gamma, rho) = (rng.gen_range(1..=2), rng.gen_range(1..=3), rng.gen_range(0..=3));
        let t = regular_rooted_tree(delta * gamma, rho).unwrap();
        let colours: Vec<usize> = (0..t.n_ids()).map(|_| rng.gen_range(0..gamma)).collect();
        let f = |v: usize| colours[v];
        let c = color_uniform(&t, &f, delta, gamma).map_err(|e| format!("color_uniform: {e}"))?;
        c.validate(None, Some(&f)).map_err(|e| format!("color_uniform certificate: {e}"))?;
    }
    for _ in 0..1000 {
        let (delta, rho) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let spec = PlantedSpec {
            width: 2 * delta,
            depth: rho,
            chord_levels: Vec::new(),
            leaf_chords: true,
            cross_edges: rng.gen_range(0..=2),
            seed: rng.gen(),
        };
        let h = planted_host(&spec).unwrap();
        let c = path_uniform(&h.graph, &h.tree, delta, rho).map_err(|e| format!("path_uniform {spec:?}: {e}"))?;
        c.validate(Some(&h.graph), None).map_err(|e| format!("path_uniform certificate: {e}"))?;
    }
    let long_path = |g: &Graph, tau: usize, rho: usize| -> Result<(), String> {
        let walk: Vec<usize> = (0..g.n()).collect();
        let out = long_path_dichotomy(g, &walk, tau, rho).map_err(|e| format!("long_path: {e}"))?;
        verify_long_path(g, &walk, tau, rho, &out).map_err(|e| format!("long_path certificate: {e}"))
    };
    let with_chords = |len: usize, chords: &[(usize, usize)]| {
        let mut e: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        e.extend_from_slice(chords);
        Graph::from_edges(len, &e).unwrap()
    };
    for _ in 0..1000 {
        let (tau, rho) = (rng.gen_range(2..=3usize), rng.gen_range(1..=2u32));
        let len = tau.pow(rho) + 1;
        let chords: Vec<(usize, usize)> = (0..len)
            .flat_map(|u| (u + 2..len).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        long_path(&with_chords(len, &chords), tau, rho as usize)?;
    }
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 2..5).map(move |v| (u, v))).collect();
    for mask in 0..1u32 << pairs.len() {
        let chords: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        long_path(&with_chords(5, &chords), 2, 2)?;
    }
    let (mut trees, mut obstructions) = (0, 0);
    for i in 0..2000 {
        let spec = small_planted(&mut rng);
        let h = planted_host(&spec).unwrap();
        let r = if i % 2 == 0 {
            path_induced_extract(&h.graph, &h.tree, 2, 2, 2)
        } else {
            branch_induced_extract(&h.graph, &h.tree, 2, 2)
        };
        match r {
            Ok(c) => {
                c.validate(Some(&h.graph), None).map_err(|e| format!("{spec:?}: {e}"))?;
                trees += 1;
            }
            Err(e) => {
                check_obstruction(&h.graph, &e).map_err(|m| format!("{spec:?}: {m}"))?;
                obstructions += 1;
            }
        }
    }
    let mut recovered = 0;
    for _ in 0..120 {
        let spec = small_planted(&mut rng);
        let h = planted_host(&spec).unwrap();
        match recover_binary_tree(&h.graph, &h.tree, 2, 2, 2) {
            Ok(w) => {
                ensure(is_induced_b2(&h.graph, &w.map), || format!("{spec:?}: not an induced B_2"))?;
                recovered += 1;
            }
            Err(e) => check_obstruction(&h.graph, &e).map_err(|m| format!("{spec:?}: {m}"))?,
        }
    }
    ensure(recovered >= 100, || format!("only {recovered} of 120 hosts gave a binary tree"))?;
    Ok(format!(
        "1000 each of colour/path-uniform and long-path plus 64 exhaustive chord patterns; \
         {trees} induced subtrees and {obstructions} verified obstructions on 2000 hosts; {recovered}/120 induced B_2"
    ))
}

// 6. Colouring-or-abyss and abyss-freeness of K_{2,2}-induced-minor-free graphs.
fn clustering_dichotomy() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut colourings, mut abysses) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let g = random_graph(n, rng.gen_range(1..=3), 6, rng.gen()).unwrap();
        let x: VertexSet = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        let (sigma, theta) = (rng.gen_range(0..=2), rng.gen_range(1..=8));
        match abyss_free_coloring(&g, &x, sigma, theta).map_err(|e| e.to_string())? {
            ColoringOutcome::Coloring(c) => {
                verify_coloring(&g, &c).map_err(|v| v.to_string())?;
                colourings += 1;
            }
            ColoringOutcome::Abyss(a) => {
                a.validate(&g)?;
                abysses += 1;
            }
        }
    }
    let c4 = cycle(4).unwrap();
    let mut free = 0;
    while free < 1000 {
        let n = rng.gen_range(2..=12);
        let g = if rng.gen_bool(0.8) { random_chordal(n, &mut rng) } else { random_tree(n, &mut rng) };
        if detect_pattern(&g, &c4, Relation::InducedMinor).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("generator produced a K_2,2 induced minor: {g:?}"));
        }
        free += 1;
        let all = VertexSet::new((0..n).collect());
        let some: VertexSet = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        for x in [all, some] {
            if let Some(a) = find_abyss(&g, &x, 2, 8).map_err(|e| e.to_string())? {
                return Err(format!("(2,8)-abyss {:?} in {g:?}", a));
            }
        }
    }
    Ok(format!(
        "{colourings} colourings and {abysses} abysses validated; no (2,8)-abyss in {free} graphs without K_2,2 induced minor"
    ))
}

fn arcs(sets: &[&[usize]]) -> MinorModel {
    MinorModel {
        branch_sets: sets.iter().map(|s| VertexSet::from(*s)).collect(),
        induced: true,
    }
}

/// Path b0 - a - b1 with a = 1.
fn p3() -> Graph {
    Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
}

// 7. Model minimisation and lifting on hand-built cases.
fn model_toolkit() -> Verdict {
    let mut cases = 0;
    let minimise = |g: &Graph, h: &Graph, a_side: &[usize], m: &MinorModel| -> Result<(), String> {
        m.validate(g, h).map_err(|v| format!("bad input model: {v}"))?;
        let out = minimize_model_side(g, h, a_side, m).map_err(|e| e.to_string())?;
        out.model.validate(g, h).map_err(|v| v.to_string())?;
        ensure(a_side.iter().all(|&a| out.model.branch_sets[a].len() == 1), || "A side not singletons".into())?;
        ensure(out.measures.windows(2).all(|w| w[1] < w[0]), || format!("measures {:?}", out.measures))
    };
    // Cycles: b0 an arc ending at 0, a the arc 1..=la, b1 the next vertex.
    for n in 6..=9 {
        for la in 1..=3 {
            for b0_len in 1..=2 {
                if la + b0_len + 2 > n {
                    continue;
                }
                let g = cycle(n).unwrap();
                let b0: Vec<usize> = (0..b0_len).map(|i| (n - i) % n).collect();
                let a: Vec<usize> = (1..=la).collect();
                minimise(&g, &p3(), &[1], &arcs(&[&b0, &a, &[la + 1]]))?;
                cases += 1;
            }
        }
    }
    // The 1-subdivided triangle around C_9 and C_12.
    let h = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
    let g9 = cycle(9).unwrap();
    minimise(&g9, &h, &[3, 4, 5], &arcs(&[&[0], &[4], &[6, 7], &[1, 2, 3], &[5], &[8]]))?;
    let g12 = cycle(12).unwrap();
    minimise(&g12, &h, &[3, 4, 5], &arcs(&[&[0], &[4, 5], &[8], &[1, 2, 3], &[6, 7], &[9, 10, 11]]))?;
    cases += 2;
    // A tree-shaped A set: the arc 1, 2, 3 of C_7 with a pendant 7 on 2.
    let mut e: Vec<(usize, usize)> = cycle(7).unwrap().edges();
    e.push((2, 7));
    let g = Graph::from_edges(8, &e).unwrap();
    minimise(&g, &p3(), &[1], &arcs(&[&[0], &[1, 2, 3, 7], &[4]]))?;
    cases += 1;

    let lift = |g: &Graph, d: &TreeDecomposition, x: usize, h: &Graph, a_side: &[usize], m: &MinorModel| {
        let out = lift_model_via_torso(g, d, x, h, a_side, m).map_err(|e| e.to_string())?;
        out.validate(g, h).map_err(|v| v.to_string())?;
        for &a in a_side {
            ensure(out.branch_sets[a] == m.branch_sets[a], || "A side changed".into())?;
        }
        Ok::<(), String>(())
    };
    // C_4 with bags {a,b,d}, {b,c,d}: the torso is a triangle, which has no
    // induced P_3, so the edge pattern stands in for it.
    let c4 = cycle(4).unwrap();
    let d = TreeDecomposition {
        tree_edges: vec![(0, 1)],
        bags: vec![VertexSet::from(vec![0, 1, 3]), VertexSet::from(vec![1, 2, 3])],
    };
    let (t, _) = torso(&c4, &d, 0).unwrap();
    ensure(t.m() == 3, || "C_4 torso is not a triangle".into())?;
    let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
    lift(&c4, &d, 0, &edge, &[1], &arcs(&[&[1, 3], &[0]]))?;
    let whole = TreeDecomposition::single_bag(&c4);
    lift(&c4, &whole, 0, &p3(), &[1], &arcs(&[&[0], &[1], &[2]]))?;
    cases += 2;
    // Cycles cut into two bags meeting in {0, k}; every induced P_3 of
    // the torso with singleton sets is lifted.
    for (n, k) in [(6, 3), (7, 4), (8, 4), (9, 5)] {
        let g = cycle(n).unwrap();
        let d = TreeDecomposition {
            tree_edges: vec![(0, 1)],
            bags: vec![VertexSet::new((0..=k).collect()), VertexSet::new((k..n).chain([0]).collect())],
        };
        is_tight(&g, &d).map_err(|f| format!("C_{n} split at {k} not tight at {}-{}", f.x, f.y))?;
        let (t, map) = torso(&g, &d, 0).unwrap();
        for a in 0..t.n() {
            for &b0 in t.neighbors(a) {
                for &b1 in t.neighbors(a) {
                    if b0 < b1 && !t.has_edge(b0, b1) {
                        lift(&g, &d, 0, &p3(), &[1], &arcs(&[&[map[b0]], &[map[a]], &[map[b1]]]))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    ensure(cases >= 20, || format!("only {cases} cases"))?;
    Ok(format!("{cases} hand-built cases validated with strictly decreasing measures"))
}

// 8. Largest torso treewidth against treewidth.
fn torso_maximum() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut literal_true, mut exceptions) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(n, rng.gen_range(1..=3), 4, rng.gen()).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let d = decomposition_from_elimination(&g, &order);
        d.validate(&g).map_err(|v| v.to_string())?;
        let tw = exact_treewidth(&g).unwrap().0;
        let mut top = 0;
        for x in 0..d.len() {
            top = top.max(exact_treewidth(&torso(&g, &d, x).unwrap().0).unwrap().0);
        }
        // What does hold: torsos never go below the treewidth, and an
        // optimal decomposition attains it.
        if top < tw {
            return Err(format!("torso treewidth {top} below treewidth {tw}"));
        }
        if !check_torso_max(&g, &exact_treewidth(&g).unwrap().1).unwrap() {
            return Err("an optimal decomposition misses the treewidth".into());
        }
        if check_torso_max(&g, &d).unwrap() {
            literal_true += 1;
        } else {
            exceptions += 1;
        }
    }
    let detail = format!(
        "equality held on {literal_true}/200 random valid decompositions ({exceptions} exceptions); \
         inequality and equality for optimal decompositions held on all"
    );
    if exceptions == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

// 9. Ramsey-type stable set statements.
fn ramsey_statements() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut ramsey, mut ehkss, mut drawn) = (0usize, 0usize, 0usize);
    while ramsey < 10_000 || ehkss < 10_000 {
        drawn += 1;
        let (t, s, alpha) = (rng.gen_range(2..=3usize), rng.gen_range(1..=2u32), rng.gen_range(1..=3u32));
        let ramsey_min = t.pow(alpha - 1);
        let ehkss_min = (alpha as usize).pow(s) * t.pow(s - 1);
        let n = if ramsey < ehkss { ramsey_min } else { ehkss_min } + rng.gen_range(0..=3);
        let g = random_restricted_graph(n, t, rng.gen_bool(0.5), rng.gen_range(2..=4), 4, rng.gen())
            .map_err(|e| e.to_string())?;
        for (check, count) in [
            (ramsey_stable_set_check(&g, t, alpha as usize), &mut ramsey),
            (ehkss_check(&g, s as usize, t, alpha as usize), &mut ehkss),
        ] {
            match check {
                StatementCheck::Pass { .. } => *count += 1,
                StatementCheck::Inapplicable { .. } => {}
                StatementCheck::Counterexample { stability_number, required } => {
                    return Err(format!("stability number {stability_number} < {required} in {g:?}"));
                }
            }
        }
    }
    Ok(format!("{ramsey} and {ehkss} qualifying graphs, no counterexample ({drawn} drawn)"))
}

fn theta(k: usize, len: usize) -> Graph {
    let mut e = Vec::new();
    let mut next = 2;
    for _ in 0..k {
        let mut prev = 0;
        for _ in 1..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        e.push((prev, 1));
    }
    Graph::from_edges(next, &e).unwrap()
}

// 10. Separability and the digraph stable set.
fn separability() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(n, rng.gen_range(1..=3), 4, rng.gen()).unwrap();
        for lambda in 1..=3 {
            let oracle = !(0..n).any(|x| {
                (x + 1..n).any(|y| !g.has_edge(x, y) && max_internally_disjoint_induced_paths(&g, x, y) >= lambda)
            });
            let s = check_separable(&g, 2, lambda).map_err(|e| e.to_string())?;
            ensure(s.separable == oracle, || format!("λ = {lambda}: {} vs oracle {oracle} on {g:?}", s.separable))?;
            if let Some(b) = &s.witness {
                b.validate(&g, 2, lambda)?;
            }
        }
    }
    let th = theta(3, 3);
    ensure(!check_separable(&th, 2, 3).unwrap().separable, || "theta graph is (2,3)-separable".into())?;
    for n in 1..=12 {
        let t = random_tree(n, &mut rng);
        ensure(check_separable(&t, 2, 2).unwrap().separable, || format!("tree {t:?} not (2,2)-separable"))?;
    }
    let (mut stable, mut shortfall) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=16);
        let d = Digraph::random(n, rng.gen_range(1..=3), 8, rng.gen()).unwrap();
        let (r, s) = (rng.gen_range(1..=2), rng.gen_range(1..=4));
        match digraph_stable_set(&d, r, s).map_err(|e| e.to_string())? {
            StableSetOutcome::Stable { vertices } => {
                ensure(
                    vertices.len() == s && d.is_stable(&vertices) && vertices.iter().all(|v| d.out_degree(v) <= r),
                    || format!("{vertices:?} is not stable among low out-degree vertices"),
                )?;
                stable += 1;
            }
            StableSetOutcome::Shortfall { best } => {
                let (sub, _) = d.underlying().induced_subgraph(&d.low_out_degree(r)).unwrap();
                let alpha = stability_number_by_subsets(&sub);
                ensure(d.is_stable(&best) && best.len() == alpha && alpha < s, || "false shortfall".into())?;
                shortfall += 1;
            }
            StableSetOutcome::Inapplicable { low_degree } => {
                ensure(low_degree < 2 * r * s, || "premise holds but reported inapplicable".into())?;
            }
        }
    }
    Ok(format!(
        "oracle agreement on 500 graphs x λ = 1..3; theta and trees as expected; {stable} stable sets, {shortfall} exact shortfalls"
    ))
}

// 11. Bound arithmetic.
fn bounds_engine() -> Verdict {
    use num_bigint::BigUint;
    let cfg = ConstantsConfig::new();
    ensure(pwtotw(1, 2).unwrap() == BigUint::from(256u32), || "pwtotw(1,2) != 256".into())?;
    ensure(mainedgecluster_colors(4).unwrap() == BigUint::from(6u32), || "C(4,2) != 6".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(1..=1000u64), rng.gen_range(1..=1000u64));
        let sigma = rng.gen_range(1..=4);
        let v = psi(&a.into(), &b.into(), 1, sigma, &cfg).map_err(|e| e.to_string())?;
        ensure(v == BigUint::from(b - 1), || format!("ψ({a},{b},1) = {v}"))?;
        let c = rng.gen_range(2..=6);
        let v = psi(&1u64.into(), &b.into(), c, sigma, &cfg).map_err(|e| e.to_string())?;
        ensure(v == BigUint::from(0u32), || format!("ψ(1,{b},{c}) = {v}"))?;
    }
    // Stub constants for the two Ramsey numbers one level down.
    for (sigma, a1, b1) in [(1u64, 5u64, 3u64), (2, 11, 7)] {
        let (a, b) = (2u64, 2u64);
        let cfg = ConstantsConfig::new()
            .with(&format!("c_bigramsey({},1,{sigma})", 2 * sigma * b), a1)
            .with(&format!("c_bigramsey({b},{b},{sigma})"), b1);
        let inner = b1 - 1;
        let by_hand = sigma * (sigma + 3) * (2 * sigma * a + 2 * sigma * b) * (a - 1) * (inner + 1);
        let params = [("a", a), ("b", b), ("c", 2), ("sigma", sigma)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let got = eval_bound("psi", &params, &cfg).map_err(|e| e.to_string())?;
        ensure(got.value == by_hand.to_string(), || format!("ψ(2,2,2), σ = {sigma}: {} vs {by_hand}", got.value))?;
    }
    let params = [("a", 2), ("b", 2), ("c", 2), ("sigma", 1)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    ensure(eval_bound("psi", &params, &cfg).is_err(), || "ψ evaluated without its constants".into())?;
    Ok("pwtotw(1,2) = 256, C(4,2) = 6, 100 base cases each, ψ(2,2,2) = 96 and 1120 under stubs".into())
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn pwbound(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pwbound")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

// 12. Determinism and exit codes.
fn determinism() -> Verdict {
    let args = ["suite", "all", "--seed", "12", "--budget", "25", "--timeout-ms", "600000"];
    let (code_a, a) = pwbound(&args);
    let (code_b, b) = pwbound(&args);
    let (mut ja, mut jb): (Value, Value) = (
        serde_json::from_str(&a).map_err(|e| e.to_string())?,
        serde_json::from_str(&b).map_err(|e| e.to_string())?,
    );
    strip_timing(&mut ja);
    strip_timing(&mut jb);
    ensure(ja == jb, || "reports differ".into())?;
    let failed = ja["failed"].as_u64().unwrap_or(u64::MAX);
    ensure(code_a == code_b && (code_a == 0) == (failed == 0), || format!("exit {code_a} with {failed} failures"))?;
    ensure(failed == 0, || format!("{failed} checks failed"))?;
    let (code, widths) = pwbound(&["suite", "widths", "--seed", "1", "--budget", "100", "--timeout-ms", "600000"]);
    let w: Value = serde_json::from_str(&widths).map_err(|e| e.to_string())?;
    let instances: u64 = w["checks"].as_array().unwrap().iter().map(|c| c["instances"].as_u64().unwrap()).sum();
    ensure(code == 0 && instances >= 100, || format!("widths suite: exit {code}, {instances} instances"))?;
    let (code, empty) = pwbound(&["suite", "all", "--budget", "0"]);
    let e: Value = serde_json::from_str(&empty).map_err(|e| e.to_string())?;
    ensure(code == 0 && e["checks"].as_array().unwrap().is_empty(), || "budget 0 is not an empty pass".into())?;
    let (code, _) = pwbound(&["suite", "nonsense"]);
    ensure(code == 2, || format!("usage error gave exit {code}"))?;
    Ok(format!("identical reports over {} checks; exit codes 0 / 2 as specified", ja["checks"].as_array().unwrap().len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "solver correctness", solver_correctness),
        (2, "widths of named graphs", named_widths),
        (3, "walls contain grids", walls_contain_grids),
        (4, "binary tree pathwidth", binary_tree_lower_bound),
        (5, "extraction certificates", extraction_certificates),
        (6, "clustering dichotomy", clustering_dichotomy),
        (7, "model toolkit", model_toolkit),
        (8, "torso maximum equals treewidth", torso_maximum),
        (9, "Ramsey statements", ramsey_statements),
        (10, "separability", separability),
        (11, "bounds engine", bounds_engine),
        (12, "determinism and exit codes", determinism),
    ];
    let results: Vec<(Verdict, u128)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, _, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let v = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (v, start.elapsed().as_millis())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut unexpected = 0;
    for ((id, name, _), (verdict, ms)) in criteria.iter().zip(&results) {
        let expected_fail = EXPECTED_FAILURES.contains(id);
        let (status, detail) = match verdict {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        let note = if expected_fail { " (expected: statement does not hold as written)" } else { "" };
        println!("criterion {id:2} {status} {name}{note}: {detail} [{ms} ms]");
        if verdict.is_ok() == expected_fail {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria did not meet expectations");
        std::process::exit(1);
    }
}
