use num_bigint::BigUint;
use proptest::prelude::*;

use pwbound::bounds::{psi, pwtotw, ConstantsConfig};
use pwbound::clustering::{abyss_free_coloring, verify_coloring, ColoringOutcome};
use pwbound::extraction::color_uniform;
use pwbound::generators::{graph_from_code, regular_rooted_tree};
use pwbound::io::{parse_graph, to_json, to_text};
use pwbound::oracle::{max_internally_disjoint_induced_paths, pathwidth_by_orderings, treewidth_by_orderings};
use pwbound::patterns::{detect_pattern, Relation};
use pwbound::separability::{disjoint_paths, find_block, Digraph, digraph_stable_set, StableSetOutcome};
use pwbound::widths::{decomposition_from_elimination, exact_pathwidth, exact_treewidth, torso};
use pwbound::{Graph, Subdivision, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, code)| {
        let bits = n * (n - 1) / 2;
        let code = if bits >= 64 { code } else { code & ((1u64 << bits) - 1) };
        graph_from_code(n, code)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_and_json_round_trip(g in graph(10)) {
        prop_assert_eq!(parse_graph(&to_text(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(10)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn line_graph_and_subdivision_sizes(g in graph(8), extra in proptest::collection::vec(0usize..3, 28)) {
        let (l, edges) = g.line_graph();
        prop_assert_eq!(l.n(), g.m());
        prop_assert_eq!(edges.len(), g.m());
        let pairs: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.m(), pairs);
        let lengths: Vec<usize> = (0..g.m()).map(|i| 2 + extra[i]).collect();
        let s = g.subdivide(&Subdivision::Proper { lengths: lengths.clone() }).unwrap();
        prop_assert_eq!(s.n(), g.n() + lengths.iter().map(|l| l - 1).sum::<usize>());
        prop_assert_eq!(s.m(), lengths.iter().sum::<usize>());
    }

    #[test]
    fn widths_match_oracles_and_decompositions_validate(g in graph(8)) {
        let (pw, pd) = exact_pathwidth(&g).unwrap();
        let (tw, td) = exact_treewidth(&g).unwrap();
        prop_assert_eq!(pw, pathwidth_by_orderings(&g));
        prop_assert_eq!(tw, treewidth_by_orderings(&g));
        prop_assert!(tw <= pw);
        prop_assert!(pd.validate(&g).is_ok() && pd.width() == pw);
        prop_assert!(td.validate(&g).is_ok() && td.width() == tw);
    }

    #[test]
    fn widths_are_monotone_under_induced_subgraphs(g in graph(9), keep in any::<u16>()) {
        let x: Vec<usize> = (0..g.n()).filter(|v| keep >> v & 1 == 1).collect();
        prop_assume!(!x.is_empty());
        let h = g.induced(&x);
        prop_assert!(exact_pathwidth(&h).unwrap().0 <= exact_pathwidth(&g).unwrap().0);
        prop_assert!(exact_treewidth(&h).unwrap().0 <= exact_treewidth(&g).unwrap().0);
    }

    #[test]
    fn torsos_bound_treewidth_from_above(g in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let d = decomposition_from_elimination(&g, &order);
        prop_assert!(d.validate(&g).is_ok());
        let top = (0..d.len())
            .map(|x| exact_treewidth(&torso(&g, &d, x).unwrap().0).unwrap().0)
            .max()
            .unwrap();
        prop_assert!(exact_treewidth(&g).unwrap().0 <= top);
        prop_assert!(top <= d.width());
    }

    #[test]
    fn induced_subgraphs_are_induced_minors(host in graph(8), pattern in graph(4)) {
        let sub = detect_pattern(&host, &pattern, Relation::InducedSubgraph).unwrap();
        let minor = detect_pattern(&host, &pattern, Relation::InducedMinor).unwrap();
        if let Some(w) = &sub {
            prop_assert!(w.validate(&host, &pattern, Relation::InducedSubgraph).is_ok());
            prop_assert!(minor.is_some());
        }
        if let Some(w) = &minor {
            prop_assert!(w.validate(&host, &pattern, Relation::InducedMinor).is_ok());
            prop_assert!(detect_pattern(&host, &pattern, Relation::Minor).unwrap().is_some());
        }
    }

    #[test]
    fn colourings_or_abysses_validate(g in graph(10), keep in any::<u16>(), sigma in 0usize..=2, theta in 1usize..=6) {
        let x: VertexSet = (0..g.n()).filter(|v| keep >> v & 1 == 1).collect();
        match abyss_free_coloring(&g, &x, sigma, theta).unwrap() {
            ColoringOutcome::Coloring(c) => prop_assert!(verify_coloring(&g, &c).is_ok()),
            ColoringOutcome::Abyss(a) => prop_assert_eq!(a.validate(&g), Ok(())),
        }
    }

    #[test]
    fn menger_paths_match_oracle(g in graph(8), pick in any::<usize>()) {
        let pairs: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|x| (x + 1..g.n()).map(move |y| (x, y)))
            .filter(|&(x, y)| !g.has_edge(x, y))
            .collect();
        prop_assume!(!pairs.is_empty());
        let (x, y) = pairs[pick % pairs.len()];
        let paths = disjoint_paths(&g, x, y, &VertexSet::empty());
        prop_assert_eq!(paths.len(), max_internally_disjoint_induced_paths(&g, x, y));
        let mut inner = VertexSet::empty();
        for p in &paths {
            prop_assert_eq!((p[0], p[p.len() - 1]), (x, y));
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
            let mid = VertexSet::from(&p[1..p.len() - 1]);
            prop_assert!(mid.is_disjoint(&inner));
            inner = inner.union(&mid);
        }
    }

    #[test]
    fn blocks_validate(g in graph(8), kappa in 2usize..=3, lambda in 1usize..=3, stable: bool, strong: bool) {
        if let Some(b) = find_block(&g, kappa, lambda, stable, strong).unwrap() {
            prop_assert_eq!(b.validate(&g, kappa, lambda), Ok(()));
            prop_assert!(!stable || b.stable);
            prop_assert!(!strong || b.strong);
        }
    }

    #[test]
    fn digraph_stable_sets_are_stable(n in 1usize..14, num in 1u32..=4, seed: u64, r in 1usize..=2, s in 1usize..=4) {
        let d = Digraph::random(n, num, 8, seed).unwrap();
        if let StableSetOutcome::Stable { vertices } = digraph_stable_set(&d, r, s).unwrap() {
            prop_assert_eq!(vertices.len(), s);
            prop_assert!(d.is_stable(&vertices));
            prop_assert!(vertices.iter().all(|v| d.out_degree(v) <= r));
        }
    }

    #[test]
    fn monochromatic_subtrees_validate(delta in 1usize..=2, gamma in 1usize..=3, rho in 0usize..=3, seed: u64) {
        use rand::{Rng, SeedableRng};
        let t = regular_rooted_tree(delta * gamma, rho).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let colours: Vec<usize> = (0..t.n_ids()).map(|_| rng.gen_range(0..gamma)).collect();
        let f = |v: usize| colours[v];
        let c = color_uniform(&t, &f, delta, gamma).unwrap();
        prop_assert!(c.validate(None, Some(&f)).is_ok());
    }

    #[test]
    fn psi_base_cases(a in 1u64..10_000, b in 1u64..10_000, c in 2u64..8, sigma in 1u64..5) {
        let cfg = ConstantsConfig::new();
        prop_assert_eq!(psi(&a.into(), &b.into(), 1, sigma, &cfg).unwrap(), BigUint::from(b - 1));
        prop_assert_eq!(psi(&1u64.into(), &b.into(), c, sigma, &cfg).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn pwtotw_grows_with_tau(rho in 1u64..4, tau in 1u64..50) {
        prop_assert!(pwtotw(rho, tau).unwrap() < pwtotw(rho, tau + 1).unwrap());
    }
}
