mod common;

use common::{brute_force_budget, brute_force_budget_all_covers, limits, mask_members, rng, vertex_covers};
use fraccomp::graphapps::{
    budget_cover, c_fold_chromatic, chromatic_number, clique_number, fractional_chromatic, kappa_f, lexicographic_product,
    verify_budget, verify_domination, Graph,
};
use fraccomp::hypergraph::{Hypergraph, ParamKind};
use fraccomp::ratlp::rat;
use itertools::Itertools;
use proptest::prelude::*;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            Graph::new(n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&p, _)| p)).unwrap()
        })
    })
}

fn nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(2, max_n).prop_filter("at least one edge", |g| g.num_edges() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn digraph_domination_identity(seed in any::<u64>()) {
        let d = common::random_digraph(&mut rng(seed), 7);
        if d.in_universal_vertex().is_none() {
            let r = verify_domination(&d).unwrap();
            prop_assert!(r.holds, "{:?} on {:?}", r, d.arcs());
        }
    }

    #[test]
    fn graph_domination_identity(g in graph(2, 7)) {
        if g.universal_vertex().is_none() {
            prop_assert!(verify_domination(&g.to_digraph()).unwrap().holds);
        }
    }

    #[test]
    fn kappa_range_and_bipartite(g in nonempty_graph(7)) {
        let r = kappa_f(&g, &limits()).unwrap();
        prop_assert!(r.identity_holds);
        prop_assert!(r.kappa > rat(1) && r.kappa <= rat(2));
        prop_assert_eq!(r.kappa == rat(2), g.is_bipartite());
    }

    #[test]
    fn all_cover_hypergraph_gives_same_kappa(g in nonempty_graph(5)) {
        let n = g.num_vertices();
        let covers = vertex_covers(&g).into_iter().map(|s| mask_members(s, n)).collect();
        let full = Hypergraph::new(n, covers).unwrap();
        prop_assert_eq!(full.fractional_param(ParamKind::Matching).unwrap(), kappa_f(&g, &limits()).unwrap().kappa);

        let independent = (1u32..1 << n)
            .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
            .map(|s| mask_members(s, n))
            .collect();
        let full = Hypergraph::new(n, independent).unwrap();
        prop_assert_eq!(full.fractional_param(ParamKind::Covering).unwrap(), fractional_chromatic(&g, &limits()).unwrap());
    }

    #[test]
    fn monotone_c_fold_scan(g in nonempty_graph(6)) {
        let lim = limits();
        let chi_c: Vec<usize> = (1..=3).map(|c| c_fold_chromatic(&g, c, &lim).unwrap()).collect();
        prop_assert_eq!(chi_c[0], chromatic_number(&g, &lim).unwrap());
        for c in 1..3 {
            prop_assert!(chi_c[c] - (c + 1) >= chi_c[c - 1] - c, "{:?}", chi_c);
        }
    }

    #[test]
    fn multicoloring_matches_product_colouring(g in nonempty_graph(5), c in 1..=2usize) {
        let lim = limits();
        let product = lexicographic_product(&g, c).unwrap();
        prop_assert_eq!(c_fold_chromatic(&g, c, &lim).unwrap(), chromatic_number(&product, &lim).unwrap());
    }

    #[test]
    fn budget_matches_family_search(g in nonempty_graph(5), b in 1..=3usize) {
        let r = budget_cover(&g, b, &limits()).unwrap();
        prop_assert_eq!(r.t, brute_force_budget(&g, b));
        prop_assert!(r.witness.is_valid_for(&g, b) && r.witness.covers.len() == r.t);
    }

    #[test]
    fn minimal_covers_suffice(g in nonempty_graph(5), b in 1..=2usize) {
        prop_assert_eq!(brute_force_budget(&g, b), brute_force_budget_all_covers(&g, b));
    }

    #[test]
    fn budget_iff_and_bounds(g in nonempty_graph(5)) {
        let r = verify_budget(&g, 3, &limits()).unwrap();
        prop_assert!(r.all_hold(), "{:?}", r);
    }

    #[test]
    fn budget_between_cliques(g in nonempty_graph(6), b in 1..=3usize) {
        let lim = limits();
        let chi = chromatic_number(&g, &lim).unwrap();
        let omega = clique_number(&g, &lim).unwrap();
        let t = budget_cover(&g, b, &lim).unwrap().t;
        prop_assert!(budget_cover(&Graph::complete(chi), b, &lim).unwrap().t <= t);
        prop_assert!(t <= budget_cover(&Graph::complete(omega), b, &lim).unwrap().t);
    }
}
