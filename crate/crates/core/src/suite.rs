//! Seeded property suites with a JSON report.
//!
//! Every check draws one instance seed per instance from a generator
//! seeded by the run seed and the check id, so any failure can be replayed
//! from the seed stored in its witness.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clustering::{
    abyss_free_coloring, component_intersection_graph, edge_coloring_from_star, find_abyss, find_star_pair_coloring,
    verify_coloring, ColoringOutcome,
};
use crate::extraction::{
    branch_induced_extract, color_uniform, long_path_dichotomy, path_induced_extract, path_uniform, planted_host,
    recover_binary_tree, verify_long_path, ExtractionError, PlantedSpec,
};
use crate::generators::{complete, cycle, random_chordal, random_graph, regular_rooted_tree};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{
    max_internally_disjoint_induced_paths, pathwidth_by_orderings, stability_number_by_subsets, treewidth_by_orderings,
};
use crate::patterns::{detect_pattern, ehkss_check, ramsey_stable_set_check, random_restricted_graph, Relation, StatementCheck};
use crate::separability::{
    check_separable, digraph_fan_selection, digraph_stable_set, find_block, find_seedling, has_fan_property,
    validate_seedling, Digraph, FanOutcome, StableSetOutcome,
};
use crate::widths::{
    check_torso_max, decomposition_from_elimination, exact_pathwidth, exact_treewidth, torso, validate_decomposition,
    Decomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Widths,
    Extraction,
    Clustering,
    Separability,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "widths" => Suite::Widths,
            "extraction" => Suite::Extraction,
            "clustering" => Suite::Clustering,
            "separability" => Suite::Separability,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s}; expected widths, extraction, clustering, separability or all")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub instances: usize,
    pub detail: String,
    /// Present on failure: the instance seed and the offending input.
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub suite: Suite,
    pub seed: u64,
    pub budget: usize,
    pub timeout_ms: u64,
    pub checks: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub elapsed_ms: u64,
}

impl RunReport {
    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> RunReport {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn instance_count(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!("{status:4} {:40} {:6} instances  {}\n", c.id, c.instances, c.detail));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped (seed {}, budget {})\n",
            self.passed, self.failed, self.skipped, self.seed, self.budget
        ));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Instances per check.
    pub budget: usize,
    pub timeout_ms: u64,
    pub command: String,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            budget: 100,
            timeout_ms: 5000,
            command: String::new(),
        }
    }
}

/// Why one instance failed.
struct Failure {
    msg: String,
    input: Value,
}

type Outcome = std::result::Result<(), Failure>;

fn fail(msg: impl Into<String>, input: Value) -> Outcome {
    Err(Failure { msg: msg.into(), input })
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(g).expect("graphs serialise")
}

struct Check {
    id: &'static str,
    suite: Suite,
    run: fn(u64) -> Outcome,
}

const CHECKS: &[Check] = &[
    Check { id: "widths.pathwidth-oracle", suite: Suite::Widths, run: pathwidth_oracle },
    Check { id: "widths.treewidth-oracle", suite: Suite::Widths, run: treewidth_oracle },
    Check { id: "widths.torso-bound", suite: Suite::Widths, run: torso_bound },
    Check { id: "extraction.color-uniform", suite: Suite::Extraction, run: color_uniform_check },
    Check { id: "extraction.path-uniform", suite: Suite::Extraction, run: path_uniform_check },
    Check { id: "extraction.long-path", suite: Suite::Extraction, run: long_path_check },
    Check { id: "extraction.path-induced", suite: Suite::Extraction, run: path_induced_check },
    Check { id: "extraction.branch-induced", suite: Suite::Extraction, run: branch_induced_check },
    Check { id: "extraction.binary-tree", suite: Suite::Extraction, run: binary_tree_check },
    Check { id: "extraction.ramsey-statements", suite: Suite::Extraction, run: ramsey_check },
    Check { id: "clustering.dichotomy", suite: Suite::Clustering, run: clustering_dichotomy },
    Check { id: "clustering.chordal-abyss-free", suite: Suite::Clustering, run: chordal_abyss_free },
    Check { id: "clustering.edge-colouring", suite: Suite::Clustering, run: edge_colouring_check },
    Check { id: "separability.two-block-oracle", suite: Suite::Separability, run: two_block_oracle },
    Check { id: "separability.digraph-stable", suite: Suite::Separability, run: digraph_stable_check },
    Check { id: "separability.digraph-fan", suite: Suite::Separability, run: digraph_fan_check },
    Check { id: "separability.blocks-and-seedlings", suite: Suite::Separability, run: blocks_and_seedlings },
];

/// Ids of the checks a suite runs, in report order.
pub fn check_ids(suite: Suite) -> Vec<&'static str> {
    let mut ids: Vec<&str> = CHECKS
        .iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| c.id)
        .collect();
    ids.sort_unstable();
    ids
}

/// FNV-1a, to give each check its own stream.
fn stream_seed(seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn run_check(check: &Check, opts: &SuiteOptions) -> CheckReport {
    let start = Instant::now();
    let deadline = Duration::from_millis(opts.timeout_ms);
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(opts.seed, check.id));
    let mut report = CheckReport {
        id: check.id.to_string(),
        status: Status::Pass,
        instances: 0,
        detail: String::new(),
        witness: None,
        elapsed_ms: 0,
    };
    for _ in 0..opts.budget {
        if start.elapsed() > deadline {
            report.status = Status::Skip;
            report.detail = format!("timeout after {} instances", report.instances);
            break;
        }
        let instance_seed: u64 = rng.gen();
        report.instances += 1;
        if let Err(f) = (check.run)(instance_seed) {
            report.status = Status::Fail;
            report.detail = f.msg;
            report.witness = Some(json!({ "instance_seed": instance_seed, "input": f.input }));
            break;
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs the checks of `suite`, each on up to `budget` instances, in
/// parallel. A budget of zero gives an empty passing report.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> RunReport {
    let start = Instant::now();
    let ids = if opts.budget == 0 { Vec::new() } else { check_ids(suite) };
    let checks: Vec<&Check> = ids
        .iter()
        .map(|id| CHECKS.iter().find(|c| c.id == *id).expect("listed id"))
        .collect();
    let mut reports: Vec<CheckReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|c| scope.spawn(move || run_check(c, opts))).collect();
        handles
            .into_iter()
            .zip(&checks)
            .map(|(h, c)| {
                h.join().unwrap_or_else(|_| CheckReport {
                    id: c.id.to_string(),
                    status: Status::Fail,
                    instances: 0,
                    detail: "check panicked".into(),
                    witness: None,
                    elapsed_ms: 0,
                })
            })
            .collect()
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |s: Status| reports.iter().filter(|c| c.status == s).count();
    RunReport {
        command: opts.command.clone(),
        suite,
        seed: opts.seed,
        budget: opts.budget,
        timeout_ms: opts.timeout_ms,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        checks: reports,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

// Widths.

fn small_random_graph(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(lo..=hi);
    let num = rng.gen_range(1..=3);
    random_graph(n, num, 4, rng.gen()).expect("valid probability")
}

fn pathwidth_oracle(seed: u64) -> Outcome {
    let g = small_random_graph(seed, 1, 8);
    let (pw, d) = exact_pathwidth(&g).map_err(|e| Failure { msg: e.to_string(), input: graph_json(&g) })?;
    let want = pathwidth_by_orderings(&g);
    if pw != want || d.width() != pw || d.validate(&g).is_err() {
        return fail(format!("pathwidth {pw} (decomposition width {}), oracle {want}", d.width()), graph_json(&g));
    }
    Ok(())
}

fn treewidth_oracle(seed: u64) -> Outcome {
    let g = small_random_graph(seed, 1, 8);
    let (tw, d) = exact_treewidth(&g).map_err(|e| Failure { msg: e.to_string(), input: graph_json(&g) })?;
    let want = treewidth_by_orderings(&g);
    if tw != want || d.width() != tw || validate_decomposition(&g, &Decomposition::Tree(d.clone())).is_err() {
        return fail(format!("treewidth {tw} (decomposition width {}), oracle {want}", d.width()), graph_json(&g));
    }
    Ok(())
}

/// Torsos of any decomposition bound the treewidth from above; an optimal
/// decomposition attains it.
fn torso_bound(seed: u64) -> Outcome {
    use rand::seq::SliceRandom;
    let g = small_random_graph(seed, 1, 9);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rng);
    let d = decomposition_from_elimination(&g, &order);
    let input = json!({ "graph": graph_json(&g), "order": order });
    let err = |e: crate::Error| Failure { msg: e.to_string(), input: input.clone() };
    let tw = exact_treewidth(&g).map_err(err)?.0;
    let mut best = 0;
    for x in 0..d.len() {
        let (t, _) = torso(&g, &d, x).map_err(err)?;
        best = best.max(exact_treewidth(&t).map_err(err)?.0);
    }
    if best < tw || best > d.width() {
        return fail(format!("largest torso treewidth {best}, treewidth {tw}, width {}", d.width()), input);
    }
    let (_, optimal) = exact_treewidth(&g).map_err(err)?;
    if !check_torso_max(&g, &optimal).map_err(err)? {
        return fail("an optimal decomposition has a torso of other treewidth", input);
    }
    Ok(())
}

// Extraction.

fn certificate_check(g: &Graph, e: &ExtractionError) -> std::result::Result<(), String> {
    match e {
        ExtractionError::CompleteBipartite { left, right } => {
            let l = VertexSet::from(&left[..]);
            let r = VertexSet::from(&right[..]);
            if l.len() != left.len() || r.len() != right.len() || !l.is_disjoint(&r) || left.len() != right.len() {
                return Err("malformed K_{t,t} sides".into());
            }
            if left.iter().any(|&a| right.iter().any(|&b| !g.has_edge(a, b))) {
                return Err("K_{t,t} sides not complete to each other".into());
            }
            Ok(())
        }
        ExtractionError::CliqueMinor { model } => {
            let k = complete(model.branch_sets.len()).map_err(|e| e.to_string())?;
            model.validate(g, &k).map_err(|v| format!("clique minor: {v:?}"))
        }
        ExtractionError::Stage { source, .. } => certificate_check(g, source),
        other => Err(other.to_string()),
    }
}

fn color_uniform_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = rng.gen_range(1..=2);
    let gamma = rng.gen_range(1..=3);
    let rho = rng.gen_range(0..=3);
    let t = regular_rooted_tree(delta * gamma, rho).expect("small tree");
    let colours: Vec<usize> = (0..t.n_ids()).map(|_| rng.gen_range(0..gamma)).collect();
    let f = |v: usize| colours[v];
    let input = json!({ "delta": delta, "gamma": gamma, "rho": rho, "colours": colours });
    match color_uniform(&t, &f, delta, gamma) {
        Ok(c) => match c.validate(None, Some(&f)) {
            Ok(()) => Ok(()),
            Err(e) => fail(e.to_string(), input),
        },
        Err(e) => fail(e.to_string(), input),
    }
}

fn path_uniform_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = rng.gen_range(1..=2);
    let rho = rng.gen_range(1..=2);
    let spec = PlantedSpec {
        width: 2 * delta,
        depth: rho,
        chord_levels: Vec::new(),
        leaf_chords: true,
        cross_edges: rng.gen_range(0..=2),
        seed: rng.gen(),
    };
    let input = json!({ "spec": spec, "delta": delta, "rho": rho });
    let h = planted_host(&spec).map_err(|e| Failure { msg: e.to_string(), input: input.clone() })?;
    match path_uniform(&h.graph, &h.tree, delta, rho) {
        Ok(c) => c.validate(Some(&h.graph), None).or_else(|e| fail(e.to_string(), input)),
        Err(e) => fail(e.to_string(), input),
    }
}

fn long_path_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau: usize = rng.gen_range(2..=3);
    let rho = rng.gen_range(1..=2);
    let len = tau.pow(rho as u32) + 1;
    let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
    for u in 0..len {
        for v in u + 2..len {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(len, &edges).expect("distinct pairs");
    let walk: Vec<usize> = (0..len).collect();
    let input = json!({ "graph": graph_json(&g), "tau": tau, "rho": rho });
    match long_path_dichotomy(&g, &walk, tau, rho) {
        Ok(out) => verify_long_path(&g, &walk, tau, rho, &out).or_else(|e| fail(e.to_string(), input)),
        Err(e) => fail(e.to_string(), input),
    }
}

fn planted_spec(rng: &mut ChaCha8Rng) -> PlantedSpec {
    PlantedSpec {
        width: 4,
        depth: 4,
        chord_levels: if rng.gen_bool(0.5) { vec![(0, 2)] } else { Vec::new() },
        leaf_chords: false,
        cross_edges: rng.gen_range(0..=2),
        seed: rng.gen(),
    }
}

fn path_induced_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = planted_spec(&mut rng);
    let input = json!({ "spec": spec });
    let h = planted_host(&spec).map_err(|e| Failure { msg: e.to_string(), input: input.clone() })?;
    match path_induced_extract(&h.graph, &h.tree, 2, 2, 2) {
        Ok(c) => c.validate(Some(&h.graph), None).or_else(|e| fail(e.to_string(), input)),
        Err(e) => certificate_check(&h.graph, &e).or_else(|m| fail(m, input)),
    }
}

fn branch_induced_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = planted_spec(&mut rng);
    let input = json!({ "spec": spec });
    let h = planted_host(&spec).map_err(|e| Failure { msg: e.to_string(), input: input.clone() })?;
    match branch_induced_extract(&h.graph, &h.tree, 2, 2) {
        Ok(c) => c.validate(Some(&h.graph), None).or_else(|e| fail(e.to_string(), input)),
        Err(e) => certificate_check(&h.graph, &e).or_else(|m| fail(m, input)),
    }
}

fn binary_tree_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = planted_spec(&mut rng);
    let input = json!({ "spec": spec });
    let h = planted_host(&spec).map_err(|e| Failure { msg: e.to_string(), input: input.clone() })?;
    // The witness is checked inside; errors must carry a certificate.
    match recover_binary_tree(&h.graph, &h.tree, 2, 2, 2) {
        Ok(_) => Ok(()),
        Err(e) => certificate_check(&h.graph, &e).or_else(|m| fail(m, input)),
    }
}

fn ramsey_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = rng.gen_range(2..=3);
    let s = rng.gen_range(1..=2);
    let alpha = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=20);
    let g = random_restricted_graph(n, t, rng.gen_bool(0.5), rng.gen_range(1..=4), 4, rng.gen()).expect("n ≤ 64");
    let input = json!({ "graph": graph_json(&g), "t": t, "s": s, "alpha": alpha });
    for check in [ramsey_stable_set_check(&g, t, alpha), ehkss_check(&g, s, t, alpha)] {
        if let StatementCheck::Counterexample { stability_number, required } = check {
            return fail(format!("stability number {stability_number}, required {required}"), input);
        }
    }
    Ok(())
}

// Clustering.

fn clustering_dichotomy(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = small_random_graph(rng.gen(), 2, 12);
    let x: VertexSet = (0..g.n()).filter(|_| rng.gen_bool(0.7)).collect();
    let sigma = rng.gen_range(0..=2);
    let theta = rng.gen_range(1..=8);
    let input = json!({ "graph": graph_json(&g), "x": x, "sigma": sigma, "theta": theta });
    match abyss_free_coloring(&g, &x, sigma, theta) {
        Ok(ColoringOutcome::Coloring(c)) => match verify_coloring(&g, &c) {
            Ok(_) => Ok(()),
            Err(v) => fail(v.to_string(), input),
        },
        Ok(ColoringOutcome::Abyss(a)) => a.validate(&g).or_else(|m| fail(m, input)),
        Err(e) => fail(e.to_string(), input),
    }
}

fn chordal_abyss_free(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=12);
    let g = random_chordal(n, &mut rng);
    let input = json!({ "graph": graph_json(&g) });
    match detect_pattern(&g, &cycle(4).expect("C4"), Relation::InducedMinor) {
        Ok(None) => {}
        Ok(Some(_)) => return fail("generated graph has a K_{2,2} induced minor", input),
        Err(e) => return fail(e.to_string(), input),
    }
    let all = VertexSet::new((0..n).collect());
    match find_abyss(&g, &all, 2, 8) {
        Ok(None) => Ok(()),
        Ok(Some(a)) => fail(format!("(2,8)-abyss {:?}", a.vertices), input),
        Err(e) => fail(e.to_string(), input),
    }
}

fn edge_colouring_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = small_random_graph(rng.gen(), 2, 9);
    let theta = rng.gen_range(1..=4);
    let input = json!({ "graph": graph_json(&g), "theta": theta });
    let err = |e: crate::Error| Failure { msg: e.to_string(), input: input.clone() };
    let all = VertexSet::new((0..g.n()).collect());
    let ColoringOutcome::Coloring(base) = abyss_free_coloring(&g, &all, 1, theta).map_err(err)? else {
        return Ok(());
    };
    let (gamma, _) = component_intersection_graph(&g, &base).map_err(err)?;
    if gamma.n() > crate::clustering::STAR_PAIR_LIMIT {
        return Ok(());
    }
    let star = find_star_pair_coloring(&gamma, gamma.n().max(1))
        .map_err(err)?
        .ok_or_else(|| Failure { msg: "no star-pair colouring with one colour per vertex".into(), input: input.clone() })?;
    let edge = edge_coloring_from_star(&g, &base, &star).map_err(err)?;
    match verify_coloring(&g, &edge) {
        Ok(_) => Ok(()),
        Err(v) => fail(v.to_string(), input),
    }
}

// Separability.

fn two_block_oracle(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = small_random_graph(rng.gen(), 2, 8);
    let lambda = rng.gen_range(1..=3);
    let input = json!({ "graph": graph_json(&g), "lambda": lambda });
    let want = !(0..g.n()).any(|x| {
        (x + 1..g.n()).any(|y| !g.has_edge(x, y) && max_internally_disjoint_induced_paths(&g, x, y) >= lambda)
    });
    match check_separable(&g, 2, lambda) {
        Ok(s) if s.separable == want => match &s.witness {
            Some(b) => b.validate(&g, 2, lambda).or_else(|m| fail(m, input)),
            None => Ok(()),
        },
        Ok(s) => fail(format!("separable = {}, oracle says {want}", s.separable), input),
        Err(e) => fail(e.to_string(), input),
    }
}

fn digraph_stable_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=16);
    let d = Digraph::random(n, rng.gen_range(1..=3), 8, rng.gen()).expect("valid probability");
    let r = rng.gen_range(1..=2);
    let s = rng.gen_range(1..=4);
    let input = json!({ "digraph": d, "r": r, "s": s });
    match digraph_stable_set(&d, r, s) {
        Ok(StableSetOutcome::Stable { vertices }) => {
            if vertices.len() == s && d.is_stable(&vertices) && vertices.iter().all(|v| d.out_degree(v) <= r) {
                Ok(())
            } else {
                fail(format!("{vertices:?} is not a stable set of size {s} among low out-degree vertices"), input)
            }
        }
        Ok(StableSetOutcome::Shortfall { best }) => {
            let low = d.low_out_degree(r);
            let (sub, _) = d.underlying().induced_subgraph(&low).expect("valid set");
            let alpha = stability_number_by_subsets(&sub);
            if d.is_stable(&best) && best.len() == alpha && alpha < s {
                Ok(())
            } else {
                fail(format!("shortfall {best:?} but the stability number is {alpha}"), input)
            }
        }
        Ok(StableSetOutcome::Inapplicable { low_degree }) => {
            if low_degree < 2 * r * s {
                Ok(())
            } else {
                fail("premise holds but reported inapplicable", input)
            }
        }
        Err(e) => fail(e.to_string(), input),
    }
}

fn digraph_fan_check(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=10);
    let d = Digraph::random(n, rng.gen_range(3..=7), 8, rng.gen()).expect("valid probability");
    let (q, r, s) = (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2));
    let input = json!({ "digraph": d, "q": q, "r": r, "s": s });
    match digraph_fan_selection(&d, q, r, s) {
        Ok(FanOutcome::Found { vertices }) => {
            if vertices.len() == s && has_fan_property(&d, &vertices, q, r) {
                Ok(())
            } else {
                fail(format!("{vertices:?} lacks the fan property"), input)
            }
        }
        Ok(FanOutcome::Inapplicable { .. }) => Ok(()),
        Ok(FanOutcome::Absent) => fail("premise holds but no s-subset has the fan property", input),
        Err(e) => fail(e.to_string(), input),
    }
}

fn blocks_and_seedlings(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = small_random_graph(rng.gen(), 3, 8);
    let input = json!({ "graph": graph_json(&g) });
    let err = |e: crate::Error| Failure { msg: e.to_string(), input: input.clone() };
    for (kappa, lambda, stable, strong) in [(3, 2, true, true), (3, 2, false, false), (2, 3, true, false)] {
        if let Some(b) = find_block(&g, kappa, lambda, stable, strong).map_err(err)? {
            if let Err(m) = b.validate(&g, kappa, lambda) {
                return fail(m, input);
            }
            if (stable && !b.stable) || (strong && !b.strong) {
                return fail("block lacks a requested flag", input);
            }
        }
    }
    if let Some(s) = find_seedling(&g, 2, 2).map_err(err)? {
        if let Err(m) = validate_seedling(&g, &s).map_err(err)? {
            return fail(m, input);
        }
    }
    Ok(())
}
