use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use pwbound::bounds::{eval_bound, parse_params, ConstantsConfig, BOUND_NAMES};
use pwbound::clustering::{
    abyss_free_coloring, component_intersection_graph, edge_coloring_from_star, find_abyss, find_star_pair_coloring,
    verify_coloring, ColoringCertificate, ColoringOutcome,
};
use pwbound::extraction::{
    branch_induced_extract, color_uniform, long_path_dichotomy, path_induced_extract, path_uniform, planted_host,
    recover_binary_tree, ExtractionError, PlantedHost, PlantedSpec,
};
use pwbound::generators::{self, Family};
use pwbound::io::{parse_graph, to_text};
use pwbound::patterns::{detect_pattern_with, DetectLimits, Relation};
use pwbound::separability::{check_separable, find_block, find_seedling, seedling_or_block};
use pwbound::suite::{run_suite, Suite, SuiteOptions};
use pwbound::widths::{exact_pathwidth, exact_treewidth};
use pwbound::{Graph, VertexSet};

#[derive(Parser)]
#[command(name = "pwbound", version, about = "Width solvers, pattern search and certificate checks for small graphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// JSON file of external constants for `bounds`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Exact pathwidth or treewidth with a decomposition.
    Width {
        #[arg(value_enum)]
        kind: WidthKind,
        file: String,
    },
    /// Search for a pattern under a containment relation.
    Detect {
        /// induced-subgraph, subgraph, minor, induced-minor or topological-subgraph.
        relation: String,
        host: String,
        pattern: String,
        /// Largest host for the minor-type searches.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Regular-subtree extraction.
    #[command(subcommand)]
    Extract(ExtractCommand),
    /// Bounded-diameter colourings and abysses.
    #[command(subcommand)]
    Cluster(ClusterCommand),
    /// Blocks, separability and seedlings.
    #[command(subcommand)]
    Sep(SepCommand),
    /// Bound arithmetic.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Run the seeded property suites.
    Suite {
        #[arg(default_value = "all")]
        suite: Suite,
        /// Instances per check.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 5000)]
        timeout_ms: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WidthKind {
    Pw,
    Tw,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Size parameter: t, k, r or n depending on the kind.
    size: usize,
    /// Second parameter: q for complete-bipartite, ρ for regular-tree.
    second: Option<usize>,
    /// Edge probability numerator for `random`.
    #[arg(long, default_value_t = 1)]
    num: u64,
    /// Edge probability denominator for `random`.
    #[arg(long, default_value_t = 2)]
    den: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    BinaryTree,
    Grid,
    Wall,
    RegularTree,
    Random,
    Chordal,
}

// Rooted host for tree extractions: a JSON file holding
// `{"graph": .., "tree": ..}`, or a planted host built from the flags.
#[derive(Args)]
struct HostArgs {
    /// JSON host `{"graph": .., "tree": ..}`; planted from the flags when absent.
    #[arg(long)]
    host: Option<String>,
    #[arg(long, default_value_t = 4)]
    width: usize,
    #[arg(long, default_value_t = 4)]
    depth: usize,
    /// Level pairs `a:b` joining depth-b vertices to their depth-a ancestor.
    #[arg(long, value_delimiter = ',')]
    chords: Vec<String>,
    #[arg(long)]
    leaf_chords: bool,
    #[arg(long, default_value_t = 0)]
    cross_edges: usize,
}

#[derive(Subcommand)]
enum ExtractCommand {
    /// Monochromatic subtree of a randomly coloured regular tree.
    ColorUniform {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        rho: usize,
        /// Leaf colours in id order; random when absent.
        #[arg(long, value_delimiter = ',')]
        colours: Vec<usize>,
    },
    /// Subtree on which every leaf sees the same ancestor adjacency pattern.
    PathUniform {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        rho: usize,
    },
    /// Long induced path or a high-degree vertex along a walk.
    LongPath {
        file: String,
        /// Walk vertices; defaults to 0, 1, …, n-1.
        #[arg(long, value_delimiter = ',')]
        walk: Vec<usize>,
        #[arg(long)]
        tau: usize,
        #[arg(long)]
        rho: usize,
    },
    /// Subtree whose root-to-leaf paths are induced paths of the host.
    PathInduced {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long)]
        tau: usize,
    },
    /// Subtree whose host edges only join vertices to ancestors.
    BranchInduced {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        tau: usize,
    },
    /// Induced subdivided binary tree.
    BinaryTree {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long)]
        tau: usize,
    },
}

#[derive(Args)]
struct ColourArgs {
    file: String,
    /// Vertices of X; all of V(G) when absent.
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
    #[arg(long)]
    sigma: usize,
    #[arg(long)]
    theta: usize,
}

#[derive(Subcommand)]
enum ClusterCommand {
    /// Search for a (σ,θ)-X-abyss.
    Abyss(ColourArgs),
    /// Colouring of G[X] with small monochromatic diameter, or an abyss.
    Vcolor(ColourArgs),
    /// Edge colouring built from a vertex colouring and a star-pair colouring.
    Ecolor {
        file: String,
        #[arg(long, default_value_t = 1)]
        sigma: usize,
        #[arg(long)]
        theta: usize,
        /// Most colours tried for the star-pair colouring.
        #[arg(long)]
        max_colours: Option<usize>,
    },
    /// Re-check a colouring certificate.
    Verify { file: String, certificate: String },
}

#[derive(Subcommand)]
enum SepCommand {
    /// Search for a (κ,λ)-block.
    Block {
        file: String,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        stable: bool,
        #[arg(long)]
        strong: bool,
    },
    /// Separable unless a stable strong (κ,λ)-block exists.
    Separable {
        file: String,
        #[arg(long, default_value_t = 2)]
        kappa: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// Search for a (λ,μ)-seedling.
    Seedling {
        file: String,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        mu: usize,
    },
    /// Separable, a seedling, or neither.
    Dichotomy {
        file: String,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long)]
        kappa: usize,
    },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Evaluate a named bound exactly.
    Eval {
        name: String,
        /// `key=value` pairs separated by commas.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// List the bound names and their parameters.
    List,
}

/// A finished command: what to print and whether it counts as a failure.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn new(value: &impl Serialize, text: impl Into<String>) -> Output {
        Output {
            json: serde_json::to_value(value).expect("results serialise"),
            text: text.into(),
            failed: false,
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
    }
}

fn read_graph(path: &str) -> anyhow::Result<Graph> {
    parse_graph(&read_input(path)?).with_context(|| format!("cannot parse {path}"))
}

fn vertex_set(g: &Graph, x: &[usize]) -> anyhow::Result<VertexSet> {
    if x.is_empty() {
        return Ok(VertexSet::new((0..g.n()).collect()));
    }
    for &v in x {
        g.check_vertex(v)?;
    }
    Ok(VertexSet::new(x.to_vec()))
}

fn load_host(h: &HostArgs, seed: u64) -> anyhow::Result<PlantedHost> {
    if let Some(path) = &h.host {
        let host: PlantedHost = serde_json::from_str(&read_input(path)?).with_context(|| format!("cannot parse {path}"))?;
        return Ok(host);
    }
    let chord_levels = h
        .chords
        .iter()
        .map(|c| {
            let (a, b) = c.split_once(':').ok_or_else(|| anyhow!("chord `{c}` is not of the form a:b"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect::<anyhow::Result<Vec<(usize, usize)>>>()?;
    Ok(planted_host(&PlantedSpec {
        width: h.width,
        depth: h.depth,
        chord_levels,
        leaf_chords: h.leaf_chords,
        cross_edges: h.cross_edges,
        seed,
    })?)
}

/// Extraction errors that carry a certificate about the host are results,
/// not failures of the command.
fn extraction_output<T: Serialize>(host: &PlantedHost, r: Result<T, ExtractionError>) -> anyhow::Result<Output> {
    let obstruction = |e: &ExtractionError| -> Option<Value> {
        let mut e = e;
        while let ExtractionError::Stage { source, .. } = e {
            e = source;
        }
        match e {
            ExtractionError::CompleteBipartite { left, right } => Some(json!({ "complete-bipartite": [left, right] })),
            ExtractionError::CliqueMinor { model } => Some(json!({ "clique-minor": model })),
            _ => None,
        }
    };
    match r {
        Ok(cert) => Ok(Output {
            json: json!({ "host": host, "certificate": cert }),
            text: "extracted".into(),
            failed: false,
        }),
        Err(e) => match obstruction(&e) {
            Some(o) => Ok(Output {
                json: json!({ "host": host, "obstruction": o, "message": e.to_string() }),
                text: format!("obstruction: {e}"),
                failed: false,
            }),
            None => Err(e.into()),
        },
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let seed = cli.seed;
    match &cli.command {
        Command::Gen(a) => {
            let second = |name: &str| a.second.ok_or_else(|| anyhow!("{name} needs a second size parameter"));
            let g = match a.kind {
                GenKind::Complete => generators::generate(&Family::Complete { t: a.size })?,
                GenKind::CompleteBipartite => generators::generate(&Family::CompleteBipartite {
                    p: a.size,
                    q: second("complete-bipartite")?,
                })?,
                GenKind::Path => generators::generate(&Family::Path { k: a.size })?,
                GenKind::Cycle => generators::generate(&Family::Cycle { k: a.size })?,
                GenKind::BinaryTree => generators::generate(&Family::BinaryTree { r: a.size })?,
                GenKind::Grid => generators::generate(&Family::Grid { r: a.size })?,
                GenKind::Wall => generators::generate(&Family::Wall { r: a.size })?,
                GenKind::RegularTree => generators::generate(&Family::RegularRootedTree {
                    delta: a.size,
                    rho: second("regular-tree")?,
                })?,
                GenKind::Random => generators::random_graph(a.size, a.num, a.den, seed)?,
                GenKind::Chordal => generators::random_chordal(a.size, &mut ChaCha8Rng::seed_from_u64(seed)),
            };
            Ok(Output::new(&g, to_text(&g)))
        }
        Command::Width { kind, file } => {
            let g = read_graph(file)?;
            let (w, name, decomposition) = match kind {
                WidthKind::Pw => {
                    let (w, d) = exact_pathwidth(&g)?;
                    (w, "pathwidth", serde_json::to_value(&d)?)
                }
                WidthKind::Tw => {
                    let (w, d) = exact_treewidth(&g)?;
                    (w, "treewidth", serde_json::to_value(&d)?)
                }
            };
            Ok(Output::new(
                &json!({ name: w, "decomposition": decomposition }),
                format!("{name} {w}\n"),
            ))
        }
        Command::Detect {
            relation,
            host,
            pattern,
            limit,
        } => {
            let relation: Relation = relation.parse()?;
            let (h, p) = (read_graph(host)?, read_graph(pattern)?);
            let mut limits = DetectLimits::default();
            if let Some(l) = limit {
                limits.max_host = *l;
            }
            let w = detect_pattern_with(&h, &p, relation, &limits)?;
            if let Some(w) = &w {
                w.validate(&h, &p, relation)
                    .map_err(|v| anyhow!("internal error: witness does not validate: {v}"))?;
            }
            let text = if w.is_some() { "found\n" } else { "absent\n" };
            Ok(Output::new(&json!({ "relation": relation, "found": w.is_some(), "witness": w }), text))
        }
        Command::Extract(e) => extract(e, seed),
        Command::Cluster(c) => cluster(c),
        Command::Sep(s) => sep(s),
        Command::Bounds(BoundsCommand::List) => {
            let list: Vec<Value> = BOUND_NAMES
                .iter()
                .map(|(name, params)| json!({ "name": name, "params": params }))
                .collect();
            let text: String = BOUND_NAMES
                .iter()
                .map(|(name, params)| format!("{name}({})\n", params.join(",")))
                .collect();
            Ok(Output::new(&list, text))
        }
        Command::Bounds(BoundsCommand::Eval { name, params }) => {
            let cfg = match &cli.config {
                Some(path) => ConstantsConfig::from_json(&read_input(&path.to_string_lossy())?)?,
                None => ConstantsConfig::new(),
            };
            let b = eval_bound(name, &parse_params(params)?, &cfg)?;
            let text = format!("{} = {}\n", b.name, b.value);
            Ok(Output::new(&b, text))
        }
        Command::Suite {
            suite,
            budget,
            timeout_ms,
        } => {
            let command: Vec<String> = std::env::args().collect();
            let report = run_suite(
                *suite,
                &SuiteOptions {
                    seed,
                    budget: *budget,
                    timeout_ms: *timeout_ms,
                    command: command.join(" "),
                },
            );
            let mut out = Output::new(&report, report.to_text());
            out.failed = report.exit_code() != 0;
            Ok(out)
        }
    }
}

fn extract(e: &ExtractCommand, seed: u64) -> anyhow::Result<Output> {
    match e {
        ExtractCommand::ColorUniform {
            delta,
            gamma,
            rho,
            colours,
        } => {
            let t = generators::regular_rooted_tree(delta * gamma, *rho)?;
            let colours = if colours.is_empty() {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..t.n_ids()).map(|_| rng.gen_range(0..*gamma)).collect()
            } else if colours.len() == t.n_ids() {
                colours.clone()
            } else {
                bail!("expected {} colours, got {}", t.n_ids(), colours.len());
            };
            let f = |v: usize| colours[v];
            let cert = color_uniform(&t, &f, *delta, *gamma)?;
            Ok(Output::new(&json!({ "colours": colours, "certificate": cert }), "extracted\n"))
        }
        ExtractCommand::PathUniform { host, delta, rho } => {
            let h = load_host(host, seed)?;
            extraction_output(&h, path_uniform(&h.graph, &h.tree, *delta, *rho))
        }
        ExtractCommand::LongPath { file, walk, tau, rho } => {
            let g = read_graph(file)?;
            let walk = if walk.is_empty() { (0..g.n()).collect() } else { walk.clone() };
            let out = long_path_dichotomy(&g, &walk, *tau, *rho)?;
            Ok(Output::new(&out, format!("{out:?}\n")))
        }
        ExtractCommand::PathInduced { host, delta, rho, tau } => {
            let h = load_host(host, seed)?;
            extraction_output(&h, path_induced_extract(&h.graph, &h.tree, *delta, *rho, *tau))
        }
        ExtractCommand::BranchInduced { host, delta, tau } => {
            let h = load_host(host, seed)?;
            extraction_output(&h, branch_induced_extract(&h.graph, &h.tree, *delta, *tau))
        }
        ExtractCommand::BinaryTree { host, delta, rho, tau } => {
            let h = load_host(host, seed)?;
            extraction_output(&h, recover_binary_tree(&h.graph, &h.tree, *delta, *rho, *tau))
        }
    }
}

fn cluster(c: &ClusterCommand) -> anyhow::Result<Output> {
    match c {
        ClusterCommand::Abyss(a) => {
            let g = read_graph(&a.file)?;
            let x = vertex_set(&g, &a.x)?;
            let abyss = find_abyss(&g, &x, a.sigma, a.theta)?;
            let text = if abyss.is_some() { "abyss found\n" } else { "no abyss\n" };
            Ok(Output::new(&json!({ "abyss": abyss }), text))
        }
        ClusterCommand::Vcolor(a) => {
            let g = read_graph(&a.file)?;
            let x = vertex_set(&g, &a.x)?;
            let outcome = abyss_free_coloring(&g, &x, a.sigma, a.theta)?;
            Ok(Output::new(&with_components(&g, &outcome), outcome_text(&outcome)))
        }
        ClusterCommand::Ecolor {
            file,
            sigma,
            theta,
            max_colours,
        } => {
            let g = read_graph(file)?;
            let all = VertexSet::new((0..g.n()).collect());
            let base = match abyss_free_coloring(&g, &all, *sigma, *theta)? {
                ColoringOutcome::Coloring(c) => c,
                abyss => return Ok(Output::new(&abyss, "abyss found\n")),
            };
            let (inter, _) = component_intersection_graph(&g, &base)?;
            let limit = max_colours.unwrap_or(inter.n().max(1));
            let Some(star) = find_star_pair_coloring(&inter, limit)? else {
                bail!("no star-pair colouring of the component graph with at most {limit} colours");
            };
            let edge = edge_coloring_from_star(&g, &base, &star)?;
            let comps = verify_coloring(&g, &edge).map_err(|v| anyhow!("internal error: {v}"))?;
            Ok(Output::new(
                &json!({ "base": base, "star": star, "certificate": edge, "components": comps }),
                "edge colouring found\n",
            ))
        }
        ClusterCommand::Verify { file, certificate } => {
            let g = read_graph(file)?;
            let c: ColoringCertificate = serde_json::from_str(&read_input(certificate)?)
                .with_context(|| format!("cannot parse {certificate}"))?;
            Ok(match verify_coloring(&g, &c) {
                Ok(comps) => Output::new(&json!({ "valid": true, "components": comps }), "valid\n"),
                Err(v) => Output {
                    json: json!({ "valid": false, "violation": v }),
                    text: format!("invalid: {v}\n"),
                    failed: true,
                },
            })
        }
    }
}

fn with_components(g: &Graph, outcome: &ColoringOutcome) -> Value {
    let mut v = serde_json::to_value(outcome).expect("outcomes serialise");
    if let ColoringOutcome::Coloring(c) = outcome {
        if let Ok(comps) = verify_coloring(g, c) {
            v["components"] = serde_json::to_value(comps).expect("components serialise");
        }
    }
    v
}

fn outcome_text(o: &ColoringOutcome) -> &'static str {
    match o {
        ColoringOutcome::Coloring(_) => "colouring found\n",
        ColoringOutcome::Abyss(_) => "abyss found\n",
    }
}

fn sep(s: &SepCommand) -> anyhow::Result<Output> {
    match s {
        SepCommand::Block {
            file,
            kappa,
            lambda,
            stable,
            strong,
        } => {
            let g = read_graph(file)?;
            let b = find_block(&g, *kappa, *lambda, *stable, *strong)?;
            let text = if b.is_some() { "block found\n" } else { "no block\n" };
            Ok(Output::new(&json!({ "block": b }), text))
        }
        SepCommand::Separable { file, kappa, lambda } => {
            let g = read_graph(file)?;
            let s = check_separable(&g, *kappa, *lambda)?;
            let text = if s.separable { "separable\n" } else { "not separable\n" };
            Ok(Output::new(&s, text))
        }
        SepCommand::Seedling { file, lambda, mu } => {
            let g = read_graph(file)?;
            let s = find_seedling(&g, *lambda, *mu)?;
            let text = if s.is_some() { "seedling found\n" } else { "no seedling\n" };
            Ok(Output::new(&json!({ "seedling": s }), text))
        }
        SepCommand::Dichotomy { file, lambda, mu, kappa } => {
            let g = read_graph(file)?;
            let d = seedling_or_block(&g, *lambda, *mu, *kappa)?;
            let text = format!("{}\n", serde_json::to_value(&d.verdict)?.as_str().unwrap_or_default());
            Ok(Output::new(&d, text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_format = match cli.command {
        Command::Gen(_) => Format::Text,
        _ => Format::Json,
    };
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.format.unwrap_or(default_format) {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("values serialise")),
        Format::Text => out.text.clone(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(if out.failed { 1 } else { 0 })
}
